fn has_scale(&self) -> bool {
    self.scale > 0
}

fn match_delta(&self, other: u32) -> bool {
    self.delta == other
}

fn match_scale(&self, other: u32) -> bool {
    self.scale == other
}

fn is_level_zero(&self) -> bool {
    self.level == 0
}

fn match_total(&self, other: u32) -> bool {
    self.total == other
}

fn match_offset(&self, other: u32) -> bool {
    self.offset == other
}

fn match_height(&self, other: u32) -> bool {
    self.height == other
}

fn check_speed(&self, limit: u32) -> bool {
    self.speed < limit
}

fn has_speed(&self) -> bool {
    self.speed > 0
}

fn match_count(&self, other: u32) -> bool {
    self.count == other
}

fn check_count(&self, limit: u32) -> bool {
    self.count < limit
}

fn is_length_zero(&self) -> bool {
    self.length == 0
}

fn is_alpha_zero(&self) -> bool {
    self.alpha == 0
}

fn match_speed(&self, other: u32) -> bool {
    self.speed == other
}

fn check_weight(&self, limit: u32) -> bool {
    self.weight < limit
}

fn is_depth_zero(&self) -> bool {
    self.depth == 0
}

fn check_total(&self, limit: u32) -> bool {
    self.total < limit
}

fn check_length(&self, limit: u32) -> bool {
    self.length < limit
}

fn has_limit(&self) -> bool {
    self.limit > 0
}

fn match_alpha(&self, other: u32) -> bool {
    self.alpha == other
}

fn is_ratio_zero(&self) -> bool {
    self.ratio == 0
}

fn check_index(&self, limit: u32) -> bool {
    self.index < limit
}

fn has_width(&self) -> bool {
    self.width > 0
}

fn match_width(&self, other: u32) -> bool {
    self.width == other
}

fn check_scale(&self, limit: u32) -> bool {
    self.scale < limit
}

fn check_depth(&self, limit: u32) -> bool {
    self.depth < limit
}

fn check_alpha(&self, limit: u32) -> bool {
    self.alpha < limit
}

fn match_ratio(&self, other: u32) -> bool {
    self.ratio == other
}

fn match_length(&self, other: u32) -> bool {
    self.length == other
}

fn is_beta_zero(&self) -> bool {
    self.beta == 0
}

fn match_level(&self, other: u32) -> bool {
    self.level == other
}

fn has_total(&self) -> bool {
    self.total > 0
}

fn has_score(&self) -> bool {
    self.score > 0
}

fn is_limit_zero(&self) -> bool {
    self.limit == 0
}

fn has_weight(&self) -> bool {
    self.weight > 0
}

fn check_ratio(&self, limit: u32) -> bool {
    self.ratio < limit
}

fn has_angle(&self) -> bool {
    self.angle > 0
}

fn is_angle_zero(&self) -> bool {
    self.angle == 0
}

fn has_offset(&self) -> bool {
    self.offset > 0
}

fn match_depth(&self, other: u32) -> bool {
    self.depth == other
}

fn match_gamma(&self, other: u32) -> bool {
    self.gamma == other
}

fn has_alpha(&self) -> bool {
    self.alpha > 0
}

fn is_score_zero(&self) -> bool {
    self.score == 0
}

fn has_ratio(&self) -> bool {
    self.ratio > 0
}

fn has_beta(&self) -> bool {
    self.beta > 0
}

fn is_width_zero(&self) -> bool {
    self.width == 0
}

fn check_gamma(&self, limit: u32) -> bool {
    self.gamma < limit
}

fn has_count(&self) -> bool {
    self.count > 0
}

fn has_height(&self) -> bool {
    self.height > 0
}

fn is_total_zero(&self) -> bool {
    self.total == 0
}

fn match_index(&self, other: u32) -> bool {
    self.index == other
}

fn match_beta(&self, other: u32) -> bool {
    self.beta == other
}

fn match_weight(&self, other: u32) -> bool {
    self.weight == other
}

fn has_delta(&self) -> bool {
    self.delta > 0
}

fn is_weight_zero(&self) -> bool {
    self.weight == 0
}

fn check_delta(&self, limit: u32) -> bool {
    self.delta < limit
}

fn check_offset(&self, limit: u32) -> bool {
    self.offset < limit
}

fn check_level(&self, limit: u32) -> bool {
    self.level < limit
}

fn check_beta(&self, limit: u32) -> bool {
    self.beta < limit
}

fn has_length(&self) -> bool {
    self.length > 0
}

fn has_index(&self) -> bool {
    self.index > 0
}

fn is_scale_zero(&self) -> bool {
    self.scale == 0
}

fn check_score(&self, limit: u32) -> bool {
    self.score < limit
}

fn match_angle(&self, other: u32) -> bool {
    self.angle == other
}

fn is_offset_zero(&self) -> bool {
    self.offset == 0
}

fn has_gamma(&self) -> bool {
    self.gamma > 0
}

fn has_level(&self) -> bool {
    self.level > 0
}

fn match_score(&self, other: u32) -> bool {
    self.score == other
}

fn check_limit(&self, limit: u32) -> bool {
    self.limit < limit
}

fn is_height_zero(&self) -> bool {
    self.height == 0
}

fn has_depth(&self) -> bool {
    self.depth > 0
}

fn is_gamma_zero(&self) -> bool {
    self.gamma == 0
}

fn check_width(&self, limit: u32) -> bool {
    self.width < limit
}

fn is_count_zero(&self) -> bool {
    self.count == 0
}

fn match_limit(&self, other: u32) -> bool {
    self.limit == other
}

fn is_index_zero(&self) -> bool {
    self.index == 0
}

fn check_angle(&self, limit: u32) -> bool {
    self.angle < limit
}

fn is_delta_zero(&self) -> bool {
    self.delta == 0
}

fn is_speed_zero(&self) -> bool {
    self.speed == 0
}

fn check_height(&self, limit: u32) -> bool {
    self.height < limit
}
