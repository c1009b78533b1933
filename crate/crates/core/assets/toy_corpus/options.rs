fn try_ratio(&self) -> Option<u32> {
    if self.ratio > 0 {
        Some(self.ratio)
    } else {
        None
    }
}

fn beta_or(&self, fallback: u32) -> u32 {
    if self.beta > 0 { self.beta } else { fallback }
}

fn width_or(&self, fallback: u32) -> u32 {
    if self.width > 0 { self.width } else { fallback }
}

fn offset_or(&self, fallback: u32) -> u32 {
    if self.offset > 0 { self.offset } else { fallback }
}

fn try_scale(&self) -> Option<u32> {
    if self.scale > 0 {
        Some(self.scale)
    } else {
        None
    }
}

fn try_delta(&self) -> Option<u32> {
    if self.delta > 0 {
        Some(self.delta)
    } else {
        None
    }
}

fn scale_or(&self, fallback: u32) -> u32 {
    if self.scale > 0 { self.scale } else { fallback }
}

fn try_height(&self) -> Option<u32> {
    if self.height > 0 {
        Some(self.height)
    } else {
        None
    }
}

fn try_angle(&self) -> Option<u32> {
    if self.angle > 0 {
        Some(self.angle)
    } else {
        None
    }
}

fn level_or(&self, fallback: u32) -> u32 {
    if self.level > 0 { self.level } else { fallback }
}

fn delta_or(&self, fallback: u32) -> u32 {
    if self.delta > 0 { self.delta } else { fallback }
}

fn try_count(&self) -> Option<u32> {
    if self.count > 0 {
        Some(self.count)
    } else {
        None
    }
}

fn try_width(&self) -> Option<u32> {
    if self.width > 0 {
        Some(self.width)
    } else {
        None
    }
}

fn try_length(&self) -> Option<u32> {
    if self.length > 0 {
        Some(self.length)
    } else {
        None
    }
}

fn length_or(&self, fallback: u32) -> u32 {
    if self.length > 0 { self.length } else { fallback }
}

fn try_offset(&self) -> Option<u32> {
    if self.offset > 0 {
        Some(self.offset)
    } else {
        None
    }
}

fn alpha_or(&self, fallback: u32) -> u32 {
    if self.alpha > 0 { self.alpha } else { fallback }
}

fn weight_or(&self, fallback: u32) -> u32 {
    if self.weight > 0 { self.weight } else { fallback }
}

fn try_weight(&self) -> Option<u32> {
    if self.weight > 0 {
        Some(self.weight)
    } else {
        None
    }
}

fn try_beta(&self) -> Option<u32> {
    if self.beta > 0 {
        Some(self.beta)
    } else {
        None
    }
}

fn try_index(&self) -> Option<u32> {
    if self.index > 0 {
        Some(self.index)
    } else {
        None
    }
}

fn try_limit(&self) -> Option<u32> {
    if self.limit > 0 {
        Some(self.limit)
    } else {
        None
    }
}

fn count_or(&self, fallback: u32) -> u32 {
    if self.count > 0 { self.count } else { fallback }
}

fn try_level(&self) -> Option<u32> {
    if self.level > 0 {
        Some(self.level)
    } else {
        None
    }
}

fn index_or(&self, fallback: u32) -> u32 {
    if self.index > 0 { self.index } else { fallback }
}

fn depth_or(&self, fallback: u32) -> u32 {
    if self.depth > 0 { self.depth } else { fallback }
}

fn try_alpha(&self) -> Option<u32> {
    if self.alpha > 0 {
        Some(self.alpha)
    } else {
        None
    }
}

fn try_speed(&self) -> Option<u32> {
    if self.speed > 0 {
        Some(self.speed)
    } else {
        None
    }
}

fn angle_or(&self, fallback: u32) -> u32 {
    if self.angle > 0 { self.angle } else { fallback }
}

fn try_depth(&self) -> Option<u32> {
    if self.depth > 0 {
        Some(self.depth)
    } else {
        None
    }
}

fn height_or(&self, fallback: u32) -> u32 {
    if self.height > 0 { self.height } else { fallback }
}

fn gamma_or(&self, fallback: u32) -> u32 {
    if self.gamma > 0 { self.gamma } else { fallback }
}

fn try_gamma(&self) -> Option<u32> {
    if self.gamma > 0 {
        Some(self.gamma)
    } else {
        None
    }
}

fn score_or(&self, fallback: u32) -> u32 {
    if self.score > 0 { self.score } else { fallback }
}

fn try_total(&self) -> Option<u32> {
    if self.total > 0 {
        Some(self.total)
    } else {
        None
    }
}

fn limit_or(&self, fallback: u32) -> u32 {
    if self.limit > 0 { self.limit } else { fallback }
}

fn speed_or(&self, fallback: u32) -> u32 {
    if self.speed > 0 { self.speed } else { fallback }
}

fn try_score(&self) -> Option<u32> {
    if self.score > 0 {
        Some(self.score)
    } else {
        None
    }
}

fn ratio_or(&self, fallback: u32) -> u32 {
    if self.ratio > 0 { self.ratio } else { fallback }
}

fn total_or(&self, fallback: u32) -> u32 {
    if self.total > 0 { self.total } else { fallback }
}
