fn halve_scale(&self) -> u32 {
    self.scale / 2
}

fn total_from_f64(value: f64) -> u32 {
    value as u32
}

fn gamma_to_f64(&self) -> f64 {
    self.gamma as f64
}

fn halve_depth(&self) -> u32 {
    self.depth / 2
}

fn depth_to_f64(&self) -> f64 {
    self.depth as f64
}

fn halve_height(&self) -> u32 {
    self.height / 2
}

fn scale_delta(&self, factor: u32) -> u32 {
    self.delta * factor
}

fn beta_to_f64(&self) -> f64 {
    self.beta as f64
}

fn halve_count(&self) -> u32 {
    self.count / 2
}

fn angle_to_f64(&self) -> f64 {
    self.angle as f64
}

fn scale_count(&self, factor: u32) -> u32 {
    self.count * factor
}

fn speed_from_f64(value: f64) -> u32 {
    value as u32
}

fn scale_limit(&self, factor: u32) -> u32 {
    self.limit * factor
}

fn angle_from_f64(value: f64) -> u32 {
    value as u32
}

fn halve_beta(&self) -> u32 {
    self.beta / 2
}

fn delta_from_f64(value: f64) -> u32 {
    value as u32
}

fn ratio_from_f64(value: f64) -> u32 {
    value as u32
}

fn halve_delta(&self) -> u32 {
    self.delta / 2
}

fn scale_total(&self, factor: u32) -> u32 {
    self.total * factor
}

fn length_from_f64(value: f64) -> u32 {
    value as u32
}

fn halve_gamma(&self) -> u32 {
    self.gamma / 2
}

fn length_to_f64(&self) -> f64 {
    self.length as f64
}

fn scale_scale(&self, factor: u32) -> u32 {
    self.scale * factor
}

fn scale_gamma(&self, factor: u32) -> u32 {
    self.gamma * factor
}

fn count_to_f64(&self) -> f64 {
    self.count as f64
}

fn ratio_to_f64(&self) -> f64 {
    self.ratio as f64
}

fn delta_to_f64(&self) -> f64 {
    self.delta as f64
}

fn beta_from_f64(value: f64) -> u32 {
    value as u32
}

fn weight_to_f64(&self) -> f64 {
    self.weight as f64
}

fn gamma_from_f64(value: f64) -> u32 {
    value as u32
}

fn halve_length(&self) -> u32 {
    self.length / 2
}

fn halve_width(&self) -> u32 {
    self.width / 2
}

fn halve_index(&self) -> u32 {
    self.index / 2
}

fn level_from_f64(value: f64) -> u32 {
    value as u32
}

fn width_from_f64(value: f64) -> u32 {
    value as u32
}

fn index_from_f64(value: f64) -> u32 {
    value as u32
}

fn weight_from_f64(value: f64) -> u32 {
    value as u32
}

fn index_to_f64(&self) -> f64 {
    self.index as f64
}

fn scale_to_f64(&self) -> f64 {
    self.scale as f64
}

fn scale_width(&self, factor: u32) -> u32 {
    self.width * factor
}

fn scale_level(&self, factor: u32) -> u32 {
    self.level * factor
}

fn score_from_f64(value: f64) -> u32 {
    value as u32
}

fn scale_depth(&self, factor: u32) -> u32 {
    self.depth * factor
}

fn scale_offset(&self, factor: u32) -> u32 {
    self.offset * factor
}

fn scale_index(&self, factor: u32) -> u32 {
    self.index * factor
}

fn scale_alpha(&self, factor: u32) -> u32 {
    self.alpha * factor
}

fn limit_to_f64(&self) -> f64 {
    self.limit as f64
}

fn offset_to_f64(&self) -> f64 {
    self.offset as f64
}

fn halve_score(&self) -> u32 {
    self.score / 2
}

fn level_to_f64(&self) -> f64 {
    self.level as f64
}

fn halve_limit(&self) -> u32 {
    self.limit / 2
}

fn alpha_from_f64(value: f64) -> u32 {
    value as u32
}

fn depth_from_f64(value: f64) -> u32 {
    value as u32
}

fn scale_height(&self, factor: u32) -> u32 {
    self.height * factor
}

fn speed_to_f64(&self) -> f64 {
    self.speed as f64
}

fn scale_score(&self, factor: u32) -> u32 {
    self.score * factor
}

fn scale_length(&self, factor: u32) -> u32 {
    self.length * factor
}

fn halve_ratio(&self) -> u32 {
    self.ratio / 2
}

fn halve_offset(&self) -> u32 {
    self.offset / 2
}

fn halve_weight(&self) -> u32 {
    self.weight / 2
}

fn height_from_f64(value: f64) -> u32 {
    value as u32
}

fn score_to_f64(&self) -> f64 {
    self.score as f64
}

fn halve_level(&self) -> u32 {
    self.level / 2
}

fn scale_speed(&self, factor: u32) -> u32 {
    self.speed * factor
}

fn total_to_f64(&self) -> f64 {
    self.total as f64
}

fn count_from_f64(value: f64) -> u32 {
    value as u32
}

fn halve_alpha(&self) -> u32 {
    self.alpha / 2
}

fn scale_beta(&self, factor: u32) -> u32 {
    self.beta * factor
}

fn scale_ratio(&self, factor: u32) -> u32 {
    self.ratio * factor
}

fn halve_total(&self) -> u32 {
    self.total / 2
}

fn height_to_f64(&self) -> f64 {
    self.height as f64
}

fn limit_from_f64(value: f64) -> u32 {
    value as u32
}

fn halve_speed(&self) -> u32 {
    self.speed / 2
}

fn width_to_f64(&self) -> f64 {
    self.width as f64
}

fn scale_from_f64(value: f64) -> u32 {
    value as u32
}

fn halve_angle(&self) -> u32 {
    self.angle / 2
}

fn scale_weight(&self, factor: u32) -> u32 {
    self.weight * factor
}

fn scale_angle(&self, factor: u32) -> u32 {
    self.angle * factor
}

fn alpha_to_f64(&self) -> f64 {
    self.alpha as f64
}

fn offset_from_f64(value: f64) -> u32 {
    value as u32
}
