fn saturate_index(&mut self, cap: u32) {
    if self.index > cap {
        self.index = cap;
    }
}

fn drop_length(&mut self) {
    self.length -= 1;
}

fn reset_speed(&mut self) {
    self.speed = 0;
}

fn drop_beta(&mut self) {
    self.beta -= 1;
}

fn saturate_angle(&mut self, cap: u32) {
    if self.angle > cap {
        self.angle = cap;
    }
}

fn drop_score(&mut self) {
    self.score -= 1;
}

fn reset_count(&mut self) {
    self.count = 0;
}

fn saturate_depth(&mut self, cap: u32) {
    if self.depth > cap {
        self.depth = cap;
    }
}

fn bump_depth(&mut self) {
    self.depth += 1;
}

fn bump_score(&mut self) {
    self.score += 1;
}

fn reset_limit(&mut self) {
    self.limit = 0;
}

fn reset_height(&mut self) {
    self.height = 0;
}

fn bump_width(&mut self) {
    self.width += 1;
}

fn bump_length(&mut self) {
    self.length += 1;
}

fn reset_total(&mut self) {
    self.total = 0;
}

fn drop_delta(&mut self) {
    self.delta -= 1;
}

fn bump_angle(&mut self) {
    self.angle += 1;
}

fn reset_beta(&mut self) {
    self.beta = 0;
}

fn reset_index(&mut self) {
    self.index = 0;
}

fn saturate_weight(&mut self, cap: u32) {
    if self.weight > cap {
        self.weight = cap;
    }
}

fn bump_total(&mut self) {
    self.total += 1;
}

fn saturate_speed(&mut self, cap: u32) {
    if self.speed > cap {
        self.speed = cap;
    }
}

fn bump_gamma(&mut self) {
    self.gamma += 1;
}

fn bump_alpha(&mut self) {
    self.alpha += 1;
}

fn bump_delta(&mut self) {
    self.delta += 1;
}

fn saturate_width(&mut self, cap: u32) {
    if self.width > cap {
        self.width = cap;
    }
}

fn bump_limit(&mut self) {
    self.limit += 1;
}

fn bump_index(&mut self) {
    self.index += 1;
}

fn drop_depth(&mut self) {
    self.depth -= 1;
}

fn reset_width(&mut self) {
    self.width = 0;
}

fn saturate_score(&mut self, cap: u32) {
    if self.score > cap {
        self.score = cap;
    }
}

fn drop_limit(&mut self) {
    self.limit -= 1;
}

fn bump_speed(&mut self) {
    self.speed += 1;
}

fn reset_offset(&mut self) {
    self.offset = 0;
}

fn saturate_limit(&mut self, cap: u32) {
    if self.limit > cap {
        self.limit = cap;
    }
}

fn drop_level(&mut self) {
    self.level -= 1;
}

fn bump_level(&mut self) {
    self.level += 1;
}

fn saturate_offset(&mut self, cap: u32) {
    if self.offset > cap {
        self.offset = cap;
    }
}

fn saturate_delta(&mut self, cap: u32) {
    if self.delta > cap {
        self.delta = cap;
    }
}

fn saturate_height(&mut self, cap: u32) {
    if self.height > cap {
        self.height = cap;
    }
}

fn bump_beta(&mut self) {
    self.beta += 1;
}

fn drop_offset(&mut self) {
    self.offset -= 1;
}

fn drop_total(&mut self) {
    self.total -= 1;
}

fn saturate_length(&mut self, cap: u32) {
    if self.length > cap {
        self.length = cap;
    }
}

fn drop_scale(&mut self) {
    self.scale -= 1;
}

fn bump_scale(&mut self) {
    self.scale += 1;
}

fn reset_scale(&mut self) {
    self.scale = 0;
}

fn bump_offset(&mut self) {
    self.offset += 1;
}

fn reset_ratio(&mut self) {
    self.ratio = 0;
}

fn saturate_beta(&mut self, cap: u32) {
    if self.beta > cap {
        self.beta = cap;
    }
}

fn reset_length(&mut self) {
    self.length = 0;
}

fn reset_angle(&mut self) {
    self.angle = 0;
}

fn drop_weight(&mut self) {
    self.weight -= 1;
}

fn reset_level(&mut self) {
    self.level = 0;
}

fn saturate_ratio(&mut self, cap: u32) {
    if self.ratio > cap {
        self.ratio = cap;
    }
}

fn reset_gamma(&mut self) {
    self.gamma = 0;
}

fn saturate_gamma(&mut self, cap: u32) {
    if self.gamma > cap {
        self.gamma = cap;
    }
}

fn drop_alpha(&mut self) {
    self.alpha -= 1;
}

fn bump_height(&mut self) {
    self.height += 1;
}

fn saturate_count(&mut self, cap: u32) {
    if self.count > cap {
        self.count = cap;
    }
}

fn reset_score(&mut self) {
    self.score = 0;
}

fn drop_ratio(&mut self) {
    self.ratio -= 1;
}

fn saturate_scale(&mut self, cap: u32) {
    if self.scale > cap {
        self.scale = cap;
    }
}

fn drop_index(&mut self) {
    self.index -= 1;
}

fn drop_speed(&mut self) {
    self.speed -= 1;
}

fn drop_height(&mut self) {
    self.height -= 1;
}

fn saturate_alpha(&mut self, cap: u32) {
    if self.alpha > cap {
        self.alpha = cap;
    }
}

fn reset_delta(&mut self) {
    self.delta = 0;
}

fn drop_angle(&mut self) {
    self.angle -= 1;
}

fn drop_gamma(&mut self) {
    self.gamma -= 1;
}

fn saturate_total(&mut self, cap: u32) {
    if self.total > cap {
        self.total = cap;
    }
}

fn bump_weight(&mut self) {
    self.weight += 1;
}

fn reset_weight(&mut self) {
    self.weight = 0;
}

fn drop_count(&mut self) {
    self.count -= 1;
}

fn bump_count(&mut self) {
    self.count += 1;
}

fn reset_alpha(&mut self) {
    self.alpha = 0;
}

fn saturate_level(&mut self, cap: u32) {
    if self.level > cap {
        self.level = cap;
    }
}

fn bump_ratio(&mut self) {
    self.ratio += 1;
}

fn drop_width(&mut self) {
    self.width -= 1;
}

fn reset_depth(&mut self) {
    self.depth = 0;
}
