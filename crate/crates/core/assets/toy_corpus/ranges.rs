fn span_index_angle(index: u32, angle: u32) -> u32 {
    if index > angle { index - angle } else { angle - index }
}

fn clamp_score(score: u32, delta: u32) -> u32 {
    if score > delta { delta } else { score }
}

fn clamp_length(length: u32, gamma: u32) -> u32 {
    if length > gamma { gamma } else { length }
}

fn clamp_index(index: u32, depth: u32) -> u32 {
    if index > depth { depth } else { index }
}

fn clamp_height(height: u32, beta: u32) -> u32 {
    if height > beta { beta } else { height }
}

fn span_height_scale(height: u32, scale: u32) -> u32 {
    if height > scale { height - scale } else { scale - height }
}

fn clamp_height(height: u32, offset: u32) -> u32 {
    if height > offset { offset } else { height }
}

fn span_limit_total(limit: u32, total: u32) -> u32 {
    if limit > total { limit - total } else { total - limit }
}

fn clamp_score(score: u32, length: u32) -> u32 {
    if score > length { length } else { score }
}

fn clamp_alpha(alpha: u32, count: u32) -> u32 {
    if alpha > count { count } else { alpha }
}

fn clamp_beta(beta: u32, count: u32) -> u32 {
    if beta > count { count } else { beta }
}

fn span_limit_depth(limit: u32, depth: u32) -> u32 {
    if limit > depth { limit - depth } else { depth - limit }
}

fn span_width_delta(width: u32, delta: u32) -> u32 {
    if width > delta { width - delta } else { delta - width }
}

fn clamp_depth(depth: u32, gamma: u32) -> u32 {
    if depth > gamma { gamma } else { depth }
}

fn span_width_alpha(width: u32, alpha: u32) -> u32 {
    if width > alpha { width - alpha } else { alpha - width }
}

fn clamp_index(index: u32, height: u32) -> u32 {
    if index > height { height } else { index }
}

fn span_weight_height(weight: u32, height: u32) -> u32 {
    if weight > height { weight - height } else { height - weight }
}

fn span_alpha_height(alpha: u32, height: u32) -> u32 {
    if alpha > height { alpha - height } else { height - alpha }
}

fn span_alpha_index(alpha: u32, index: u32) -> u32 {
    if alpha > index { alpha - index } else { index - alpha }
}

fn span_scale_level(scale: u32, level: u32) -> u32 {
    if scale > level { scale - level } else { level - scale }
}

fn span_depth_beta(depth: u32, beta: u32) -> u32 {
    if depth > beta { depth - beta } else { beta - depth }
}

fn span_beta_offset(beta: u32, offset: u32) -> u32 {
    if beta > offset { beta - offset } else { offset - beta }
}

fn span_speed_length(speed: u32, length: u32) -> u32 {
    if speed > length { speed - length } else { length - speed }
}

fn span_beta_level(beta: u32, level: u32) -> u32 {
    if beta > level { beta - level } else { level - beta }
}

fn clamp_limit(limit: u32, count: u32) -> u32 {
    if limit > count { count } else { limit }
}

fn clamp_limit(limit: u32, index: u32) -> u32 {
    if limit > index { index } else { limit }
}

fn span_speed_score(speed: u32, score: u32) -> u32 {
    if speed > score { speed - score } else { score - speed }
}

fn span_alpha_level(alpha: u32, level: u32) -> u32 {
    if alpha > level { alpha - level } else { level - alpha }
}

fn clamp_limit(limit: u32, score: u32) -> u32 {
    if limit > score { score } else { limit }
}

fn span_limit_alpha(limit: u32, alpha: u32) -> u32 {
    if limit > alpha { limit - alpha } else { alpha - limit }
}

fn span_score_depth(score: u32, depth: u32) -> u32 {
    if score > depth { score - depth } else { depth - score }
}

fn span_length_alpha(length: u32, alpha: u32) -> u32 {
    if length > alpha { length - alpha } else { alpha - length }
}

fn span_speed_depth(speed: u32, depth: u32) -> u32 {
    if speed > depth { speed - depth } else { depth - speed }
}

fn clamp_index(index: u32, ratio: u32) -> u32 {
    if index > ratio { ratio } else { index }
}

fn span_level_offset(level: u32, offset: u32) -> u32 {
    if level > offset { level - offset } else { offset - level }
}

fn clamp_width(width: u32, level: u32) -> u32 {
    if width > level { level } else { width }
}

fn clamp_depth(depth: u32, speed: u32) -> u32 {
    if depth > speed { speed } else { depth }
}

fn clamp_limit(limit: u32, offset: u32) -> u32 {
    if limit > offset { offset } else { limit }
}

fn span_score_offset(score: u32, offset: u32) -> u32 {
    if score > offset { score - offset } else { offset - score }
}

fn clamp_index(index: u32, alpha: u32) -> u32 {
    if index > alpha { alpha } else { index }
}

fn span_weight_offset(weight: u32, offset: u32) -> u32 {
    if weight > offset { weight - offset } else { offset - weight }
}

fn clamp_scale(scale: u32, angle: u32) -> u32 {
    if scale > angle { angle } else { scale }
}

fn clamp_gamma(gamma: u32, width: u32) -> u32 {
    if gamma > width { width } else { gamma }
}

fn span_ratio_depth(ratio: u32, depth: u32) -> u32 {
    if ratio > depth { ratio - depth } else { depth - ratio }
}

fn span_height_width(height: u32, width: u32) -> u32 {
    if height > width { height - width } else { width - height }
}

fn span_scale_ratio(scale: u32, ratio: u32) -> u32 {
    if scale > ratio { scale - ratio } else { ratio - scale }
}

fn clamp_score(score: u32, speed: u32) -> u32 {
    if score > speed { speed } else { score }
}

fn clamp_beta(beta: u32, limit: u32) -> u32 {
    if beta > limit { limit } else { beta }
}

fn clamp_level(level: u32, beta: u32) -> u32 {
    if level > beta { beta } else { level }
}

fn clamp_total(total: u32, limit: u32) -> u32 {
    if total > limit { limit } else { total }
}

fn span_ratio_speed(ratio: u32, speed: u32) -> u32 {
    if ratio > speed { ratio - speed } else { speed - ratio }
}

fn clamp_beta(beta: u32, height: u32) -> u32 {
    if beta > height { height } else { beta }
}

fn clamp_speed(speed: u32, offset: u32) -> u32 {
    if speed > offset { offset } else { speed }
}

fn clamp_count(count: u32, speed: u32) -> u32 {
    if count > speed { speed } else { count }
}

fn span_level_angle(level: u32, angle: u32) -> u32 {
    if level > angle { level - angle } else { angle - level }
}

fn span_total_score(total: u32, score: u32) -> u32 {
    if total > score { total - score } else { score - total }
}

fn span_count_delta(count: u32, delta: u32) -> u32 {
    if count > delta { count - delta } else { delta - count }
}

fn span_index_total(index: u32, total: u32) -> u32 {
    if index > total { index - total } else { total - index }
}

fn span_speed_weight(speed: u32, weight: u32) -> u32 {
    if speed > weight { speed - weight } else { weight - speed }
}

fn clamp_width(width: u32, ratio: u32) -> u32 {
    if width > ratio { ratio } else { width }
}

fn clamp_scale(scale: u32, index: u32) -> u32 {
    if scale > index { index } else { scale }
}

fn span_delta_ratio(delta: u32, ratio: u32) -> u32 {
    if delta > ratio { delta - ratio } else { ratio - delta }
}

fn clamp_speed(speed: u32, limit: u32) -> u32 {
    if speed > limit { limit } else { speed }
}

fn clamp_score(score: u32, index: u32) -> u32 {
    if score > index { index } else { score }
}

fn span_ratio_level(ratio: u32, level: u32) -> u32 {
    if ratio > level { ratio - level } else { level - ratio }
}

fn clamp_level(level: u32, gamma: u32) -> u32 {
    if level > gamma { gamma } else { level }
}

fn clamp_ratio(ratio: u32, beta: u32) -> u32 {
    if ratio > beta { beta } else { ratio }
}

fn clamp_gamma(gamma: u32, alpha: u32) -> u32 {
    if gamma > alpha { alpha } else { gamma }
}

fn span_scale_height(scale: u32, height: u32) -> u32 {
    if scale > height { scale - height } else { height - scale }
}

fn clamp_beta(beta: u32, weight: u32) -> u32 {
    if beta > weight { weight } else { beta }
}

fn clamp_total(total: u32, height: u32) -> u32 {
    if total > height { height } else { total }
}

fn span_height_limit(height: u32, limit: u32) -> u32 {
    if height > limit { height - limit } else { limit - height }
}

fn clamp_angle(angle: u32, width: u32) -> u32 {
    if angle > width { width } else { angle }
}

fn span_limit_gamma(limit: u32, gamma: u32) -> u32 {
    if limit > gamma { limit - gamma } else { gamma - limit }
}

fn span_total_depth(total: u32, depth: u32) -> u32 {
    if total > depth { total - depth } else { depth - total }
}

fn span_width_beta(width: u32, beta: u32) -> u32 {
    if width > beta { width - beta } else { beta - width }
}

fn clamp_width(width: u32, speed: u32) -> u32 {
    if width > speed { speed } else { width }
}

fn span_beta_scale(beta: u32, scale: u32) -> u32 {
    if beta > scale { beta - scale } else { scale - beta }
}

fn clamp_alpha(alpha: u32, weight: u32) -> u32 {
    if alpha > weight { weight } else { alpha }
}

fn clamp_count(count: u32, depth: u32) -> u32 {
    if count > depth { depth } else { count }
}
