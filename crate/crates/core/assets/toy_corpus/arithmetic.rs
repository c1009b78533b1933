fn max_angle_alpha(angle: u32, alpha: u32) -> u32 {
    if angle > alpha { angle } else { alpha }
}

fn add_level_height(level: u32, height: u32) -> u32 {
    level + height
}

fn mul_delta_offset(delta: u32, offset: u32) -> u32 {
    delta * offset
}

fn mul_offset_gamma(offset: u32, gamma: u32) -> u32 {
    offset * gamma
}

fn add_limit_level(limit: u32, level: u32) -> u32 {
    limit + level
}

fn min_width_scale(width: u32, scale: u32) -> u32 {
    if width < scale { width } else { scale }
}

fn min_width_index(width: u32, index: u32) -> u32 {
    if width < index { width } else { index }
}

fn max_offset_beta(offset: u32, beta: u32) -> u32 {
    if offset > beta { offset } else { beta }
}

fn min_length_angle(length: u32, angle: u32) -> u32 {
    if length < angle { length } else { angle }
}

fn mul_alpha_depth(alpha: u32, depth: u32) -> u32 {
    alpha * depth
}

fn sub_length_delta(length: u32, delta: u32) -> u32 {
    length - delta
}

fn mul_total_ratio(total: u32, ratio: u32) -> u32 {
    total * ratio
}

fn min_level_total(level: u32, total: u32) -> u32 {
    if level < total { level } else { total }
}

fn sub_level_length(level: u32, length: u32) -> u32 {
    level - length
}

fn add_width_limit(width: u32, limit: u32) -> u32 {
    width + limit
}

fn sub_level_width(level: u32, width: u32) -> u32 {
    level - width
}

fn mul_speed_scale(speed: u32, scale: u32) -> u32 {
    speed * scale
}

fn sub_offset_length(offset: u32, length: u32) -> u32 {
    offset - length
}

fn min_height_speed(height: u32, speed: u32) -> u32 {
    if height < speed { height } else { speed }
}

fn mul_alpha_length(alpha: u32, length: u32) -> u32 {
    alpha * length
}

fn add_height_index(height: u32, index: u32) -> u32 {
    height + index
}

fn max_speed_gamma(speed: u32, gamma: u32) -> u32 {
    if speed > gamma { speed } else { gamma }
}

fn mul_length_level(length: u32, level: u32) -> u32 {
    length * level
}

fn min_count_score(count: u32, score: u32) -> u32 {
    if count < score { count } else { score }
}

fn add_offset_delta(offset: u32, delta: u32) -> u32 {
    offset + delta
}

fn mul_alpha_speed(alpha: u32, speed: u32) -> u32 {
    alpha * speed
}

fn max_angle_weight(angle: u32, weight: u32) -> u32 {
    if angle > weight { angle } else { weight }
}

fn mul_gamma_depth(gamma: u32, depth: u32) -> u32 {
    gamma * depth
}

fn sub_speed_alpha(speed: u32, alpha: u32) -> u32 {
    speed - alpha
}

fn add_length_total(length: u32, total: u32) -> u32 {
    length + total
}

fn mul_scale_limit(scale: u32, limit: u32) -> u32 {
    scale * limit
}

fn min_gamma_beta(gamma: u32, beta: u32) -> u32 {
    if gamma < beta { gamma } else { beta }
}

fn min_speed_ratio(speed: u32, ratio: u32) -> u32 {
    if speed < ratio { speed } else { ratio }
}

fn sub_total_delta(total: u32, delta: u32) -> u32 {
    total - delta
}

fn max_index_offset(index: u32, offset: u32) -> u32 {
    if index > offset { index } else { offset }
}

fn min_offset_level(offset: u32, level: u32) -> u32 {
    if offset < level { offset } else { level }
}

fn max_gamma_total(gamma: u32, total: u32) -> u32 {
    if gamma > total { gamma } else { total }
}

fn mul_score_beta(score: u32, beta: u32) -> u32 {
    score * beta
}

fn sub_offset_scale(offset: u32, scale: u32) -> u32 {
    offset - scale
}

fn max_limit_speed(limit: u32, speed: u32) -> u32 {
    if limit > speed { limit } else { speed }
}

fn mul_angle_delta(angle: u32, delta: u32) -> u32 {
    angle * delta
}

fn mul_count_weight(count: u32, weight: u32) -> u32 {
    count * weight
}

fn max_height_angle(height: u32, angle: u32) -> u32 {
    if height > angle { height } else { angle }
}

fn max_width_weight(width: u32, weight: u32) -> u32 {
    if width > weight { width } else { weight }
}

fn sub_angle_depth(angle: u32, depth: u32) -> u32 {
    angle - depth
}

fn add_gamma_angle(gamma: u32, angle: u32) -> u32 {
    gamma + angle
}

fn mul_angle_speed(angle: u32, speed: u32) -> u32 {
    angle * speed
}

fn add_depth_total(depth: u32, total: u32) -> u32 {
    depth + total
}

fn sub_beta_speed(beta: u32, speed: u32) -> u32 {
    beta - speed
}

fn add_length_offset(length: u32, offset: u32) -> u32 {
    length + offset
}

fn min_delta_height(delta: u32, height: u32) -> u32 {
    if delta < height { delta } else { height }
}

fn sub_count_offset(count: u32, offset: u32) -> u32 {
    count - offset
}

fn max_alpha_width(alpha: u32, width: u32) -> u32 {
    if alpha > width { alpha } else { width }
}

fn max_count_index(count: u32, index: u32) -> u32 {
    if count > index { count } else { index }
}

fn mul_limit_angle(limit: u32, angle: u32) -> u32 {
    limit * angle
}

fn add_count_beta(count: u32, beta: u32) -> u32 {
    count + beta
}

fn add_alpha_total(alpha: u32, total: u32) -> u32 {
    alpha + total
}

fn add_index_scale(index: u32, scale: u32) -> u32 {
    index + scale
}

fn max_height_total(height: u32, total: u32) -> u32 {
    if height > total { height } else { total }
}

fn max_weight_count(weight: u32, count: u32) -> u32 {
    if weight > count { weight } else { count }
}

fn max_width_angle(width: u32, angle: u32) -> u32 {
    if width > angle { width } else { angle }
}

fn min_scale_total(scale: u32, total: u32) -> u32 {
    if scale < total { scale } else { total }
}

fn mul_index_weight(index: u32, weight: u32) -> u32 {
    index * weight
}

fn min_angle_offset(angle: u32, offset: u32) -> u32 {
    if angle < offset { angle } else { offset }
}

fn add_count_alpha(count: u32, alpha: u32) -> u32 {
    count + alpha
}

fn max_gamma_speed(gamma: u32, speed: u32) -> u32 {
    if gamma > speed { gamma } else { speed }
}

fn mul_angle_total(angle: u32, total: u32) -> u32 {
    angle * total
}

fn mul_depth_alpha(depth: u32, alpha: u32) -> u32 {
    depth * alpha
}

fn sub_scale_length(scale: u32, length: u32) -> u32 {
    scale - length
}

fn min_delta_total(delta: u32, total: u32) -> u32 {
    if delta < total { delta } else { total }
}

fn sub_depth_scale(depth: u32, scale: u32) -> u32 {
    depth - scale
}

fn sub_width_height(width: u32, height: u32) -> u32 {
    width - height
}

fn max_scale_beta(scale: u32, beta: u32) -> u32 {
    if scale > beta { scale } else { beta }
}

fn sub_index_count(index: u32, count: u32) -> u32 {
    index - count
}

fn sub_weight_score(weight: u32, score: u32) -> u32 {
    weight - score
}

fn add_beta_total(beta: u32, total: u32) -> u32 {
    beta + total
}

fn sub_score_scale(score: u32, scale: u32) -> u32 {
    score - scale
}

fn add_scale_offset(scale: u32, offset: u32) -> u32 {
    scale + offset
}

fn max_delta_depth(delta: u32, depth: u32) -> u32 {
    if delta > depth { delta } else { depth }
}

fn max_depth_height(depth: u32, height: u32) -> u32 {
    if depth > height { depth } else { height }
}

fn max_width_depth(width: u32, depth: u32) -> u32 {
    if width > depth { width } else { depth }
}

fn min_beta_alpha(beta: u32, alpha: u32) -> u32 {
    if beta < alpha { beta } else { alpha }
}

fn min_score_total(score: u32, total: u32) -> u32 {
    if score < total { score } else { total }
}

fn sub_ratio_width(ratio: u32, width: u32) -> u32 {
    ratio - width
}

fn add_delta_limit(delta: u32, limit: u32) -> u32 {
    delta + limit
}

fn sub_delta_count(delta: u32, count: u32) -> u32 {
    delta - count
}

fn mul_angle_scale(angle: u32, scale: u32) -> u32 {
    angle * scale
}

fn min_level_count(level: u32, count: u32) -> u32 {
    if level < count { level } else { count }
}

fn add_gamma_delta(gamma: u32, delta: u32) -> u32 {
    gamma + delta
}

fn mul_index_delta(index: u32, delta: u32) -> u32 {
    index * delta
}

fn add_weight_length(weight: u32, length: u32) -> u32 {
    weight + length
}

fn min_alpha_score(alpha: u32, score: u32) -> u32 {
    if alpha < score { alpha } else { score }
}

fn min_offset_speed(offset: u32, speed: u32) -> u32 {
    if offset < speed { offset } else { speed }
}

fn max_ratio_offset(ratio: u32, offset: u32) -> u32 {
    if ratio > offset { ratio } else { offset }
}

fn add_total_speed(total: u32, speed: u32) -> u32 {
    total + speed
}

fn sub_alpha_scale(alpha: u32, scale: u32) -> u32 {
    alpha - scale
}

fn min_count_length(count: u32, length: u32) -> u32 {
    if count < length { count } else { length }
}

fn min_level_index(level: u32, index: u32) -> u32 {
    if level < index { level } else { index }
}

fn min_alpha_offset(alpha: u32, offset: u32) -> u32 {
    if alpha < offset { alpha } else { offset }
}

fn max_delta_level(delta: u32, level: u32) -> u32 {
    if delta > level { delta } else { level }
}

fn add_delta_score(delta: u32, score: u32) -> u32 {
    delta + score
}

fn mul_speed_beta(speed: u32, beta: u32) -> u32 {
    speed * beta
}

fn min_scale_weight(scale: u32, weight: u32) -> u32 {
    if scale < weight { scale } else { weight }
}

fn max_score_weight(score: u32, weight: u32) -> u32 {
    if score > weight { score } else { weight }
}

fn min_total_weight(total: u32, weight: u32) -> u32 {
    if total < weight { total } else { weight }
}

fn max_level_limit(level: u32, limit: u32) -> u32 {
    if level > limit { level } else { limit }
}

fn mul_beta_angle(beta: u32, angle: u32) -> u32 {
    beta * angle
}

fn min_angle_ratio(angle: u32, ratio: u32) -> u32 {
    if angle < ratio { angle } else { ratio }
}

fn add_depth_index(depth: u32, index: u32) -> u32 {
    depth + index
}

fn mul_gamma_level(gamma: u32, level: u32) -> u32 {
    gamma * level
}

fn add_offset_weight(offset: u32, weight: u32) -> u32 {
    offset + weight
}

fn sub_speed_index(speed: u32, index: u32) -> u32 {
    speed - index
}

fn sub_height_ratio(height: u32, ratio: u32) -> u32 {
    height - ratio
}

fn add_delta_alpha(delta: u32, alpha: u32) -> u32 {
    delta + alpha
}

fn sub_offset_angle(offset: u32, angle: u32) -> u32 {
    offset - angle
}

fn add_speed_angle(speed: u32, angle: u32) -> u32 {
    speed + angle
}

fn max_angle_beta(angle: u32, beta: u32) -> u32 {
    if angle > beta { angle } else { beta }
}

fn max_limit_height(limit: u32, height: u32) -> u32 {
    if limit > height { limit } else { height }
}

fn sub_alpha_angle(alpha: u32, angle: u32) -> u32 {
    alpha - angle
}

fn sub_height_gamma(height: u32, gamma: u32) -> u32 {
    height - gamma
}

fn max_index_beta(index: u32, beta: u32) -> u32 {
    if index > beta { index } else { beta }
}

fn max_speed_count(speed: u32, count: u32) -> u32 {
    if speed > count { speed } else { count }
}

fn sub_scale_delta(scale: u32, delta: u32) -> u32 {
    scale - delta
}

fn sub_weight_alpha(weight: u32, alpha: u32) -> u32 {
    weight - alpha
}

fn min_depth_level(depth: u32, level: u32) -> u32 {
    if depth < level { depth } else { level }
}

fn min_index_gamma(index: u32, gamma: u32) -> u32 {
    if index < gamma { index } else { gamma }
}

fn add_scale_speed(scale: u32, speed: u32) -> u32 {
    scale + speed
}

fn max_score_width(score: u32, width: u32) -> u32 {
    if score > width { score } else { width }
}

fn mul_score_gamma(score: u32, gamma: u32) -> u32 {
    score * gamma
}

fn min_level_speed(level: u32, speed: u32) -> u32 {
    if level < speed { level } else { speed }
}

fn sub_alpha_limit(alpha: u32, limit: u32) -> u32 {
    alpha - limit
}

fn min_level_alpha(level: u32, alpha: u32) -> u32 {
    if level < alpha { level } else { alpha }
}

fn max_gamma_offset(gamma: u32, offset: u32) -> u32 {
    if gamma > offset { gamma } else { offset }
}

fn max_weight_delta(weight: u32, delta: u32) -> u32 {
    if weight > delta { weight } else { delta }
}

fn max_limit_length(limit: u32, length: u32) -> u32 {
    if limit > length { limit } else { length }
}

fn min_count_scale(count: u32, scale: u32) -> u32 {
    if count < scale { count } else { scale }
}

fn min_depth_width(depth: u32, width: u32) -> u32 {
    if depth < width { depth } else { width }
}

fn add_scale_count(scale: u32, count: u32) -> u32 {
    scale + count
}

fn mul_beta_gamma(beta: u32, gamma: u32) -> u32 {
    beta * gamma
}

fn min_score_ratio(score: u32, ratio: u32) -> u32 {
    if score < ratio { score } else { ratio }
}

fn min_length_score(length: u32, score: u32) -> u32 {
    if length < score { length } else { score }
}

fn min_weight_index(weight: u32, index: u32) -> u32 {
    if weight < index { weight } else { index }
}

fn add_index_level(index: u32, level: u32) -> u32 {
    index + level
}

fn sub_limit_weight(limit: u32, weight: u32) -> u32 {
    limit - weight
}

fn sub_beta_delta(beta: u32, delta: u32) -> u32 {
    beta - delta
}

fn mul_total_level(total: u32, level: u32) -> u32 {
    total * level
}

fn min_index_limit(index: u32, limit: u32) -> u32 {
    if index < limit { index } else { limit }
}

fn sub_gamma_ratio(gamma: u32, ratio: u32) -> u32 {
    gamma - ratio
}

fn min_weight_width(weight: u32, width: u32) -> u32 {
    if weight < width { weight } else { width }
}

fn min_ratio_total(ratio: u32, total: u32) -> u32 {
    if ratio < total { ratio } else { total }
}

fn max_height_alpha(height: u32, alpha: u32) -> u32 {
    if height > alpha { height } else { alpha }
}

fn add_ratio_gamma(ratio: u32, gamma: u32) -> u32 {
    ratio + gamma
}

fn max_angle_limit(angle: u32, limit: u32) -> u32 {
    if angle > limit { angle } else { limit }
}

fn add_score_level(score: u32, level: u32) -> u32 {
    score + level
}

fn min_offset_height(offset: u32, height: u32) -> u32 {
    if offset < height { offset } else { height }
}

fn add_total_gamma(total: u32, gamma: u32) -> u32 {
    total + gamma
}

fn max_delta_weight(delta: u32, weight: u32) -> u32 {
    if delta > weight { delta } else { weight }
}

fn mul_beta_score(beta: u32, score: u32) -> u32 {
    beta * score
}

fn mul_scale_depth(scale: u32, depth: u32) -> u32 {
    scale * depth
}

fn min_depth_ratio(depth: u32, ratio: u32) -> u32 {
    if depth < ratio { depth } else { ratio }
}

fn min_score_limit(score: u32, limit: u32) -> u32 {
    if score < limit { score } else { limit }
}

fn min_ratio_length(ratio: u32, length: u32) -> u32 {
    if ratio < length { ratio } else { length }
}

fn max_ratio_alpha(ratio: u32, alpha: u32) -> u32 {
    if ratio > alpha { ratio } else { alpha }
}

fn max_count_limit(count: u32, limit: u32) -> u32 {
    if count > limit { count } else { limit }
}

fn max_offset_count(offset: u32, count: u32) -> u32 {
    if offset > count { offset } else { count }
}

fn mul_angle_level(angle: u32, level: u32) -> u32 {
    angle * level
}

fn max_angle_length(angle: u32, length: u32) -> u32 {
    if angle > length { angle } else { length }
}

fn max_length_speed(length: u32, speed: u32) -> u32 {
    if length > speed { length } else { speed }
}

fn max_scale_width(scale: u32, width: u32) -> u32 {
    if scale > width { scale } else { width }
}

fn mul_total_index(total: u32, index: u32) -> u32 {
    total * index
}
