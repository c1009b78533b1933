fn clear_level(&mut self) {
    self.level = 0;
}

fn take_index(&mut self) -> u32 {
    let value = self.index;
    self.index = 0;
    value
}

fn get_score(&self) -> u32 {
    self.score
}

fn set_total(&mut self, value: u32) {
    self.total = value;
}

fn with_index(mut self, value: u32) -> Self {
    self.index = value;
    self
}

fn set_gamma(&mut self, value: u32) {
    self.gamma = value;
}

fn clear_gamma(&mut self) {
    self.gamma = 0;
}

fn with_total(mut self, value: u32) -> Self {
    self.total = value;
    self
}

fn with_limit(mut self, value: u32) -> Self {
    self.limit = value;
    self
}

fn take_speed(&mut self) -> u32 {
    let value = self.speed;
    self.speed = 0;
    value
}

fn take_scale(&mut self) -> u32 {
    let value = self.scale;
    self.scale = 0;
    value
}

fn take_score(&mut self) -> u32 {
    let value = self.score;
    self.score = 0;
    value
}

fn set_alpha(&mut self, value: u32) {
    self.alpha = value;
}

fn clear_count(&mut self) {
    self.count = 0;
}

fn clear_index(&mut self) {
    self.index = 0;
}

fn get_angle(&self) -> u32 {
    self.angle
}

fn get_level(&self) -> u32 {
    self.level
}

fn with_delta(mut self, value: u32) -> Self {
    self.delta = value;
    self
}

fn get_height(&self) -> u32 {
    self.height
}

fn set_limit(&mut self, value: u32) {
    self.limit = value;
}

fn set_count(&mut self, value: u32) {
    self.count = value;
}

fn with_speed(mut self, value: u32) -> Self {
    self.speed = value;
    self
}

fn get_index(&self) -> u32 {
    self.index
}

fn get_gamma(&self) -> u32 {
    self.gamma
}

fn with_height(mut self, value: u32) -> Self {
    self.height = value;
    self
}

fn set_speed(&mut self, value: u32) {
    self.speed = value;
}

fn set_weight(&mut self, value: u32) {
    self.weight = value;
}

fn set_delta(&mut self, value: u32) {
    self.delta = value;
}

fn clear_height(&mut self) {
    self.height = 0;
}

fn get_ratio(&self) -> u32 {
    self.ratio
}

fn with_ratio(mut self, value: u32) -> Self {
    self.ratio = value;
    self
}

fn with_depth(mut self, value: u32) -> Self {
    self.depth = value;
    self
}

fn take_ratio(&mut self) -> u32 {
    let value = self.ratio;
    self.ratio = 0;
    value
}

fn take_beta(&mut self) -> u32 {
    let value = self.beta;
    self.beta = 0;
    value
}

fn take_angle(&mut self) -> u32 {
    let value = self.angle;
    self.angle = 0;
    value
}

fn take_length(&mut self) -> u32 {
    let value = self.length;
    self.length = 0;
    value
}

fn clear_depth(&mut self) {
    self.depth = 0;
}

fn take_depth(&mut self) -> u32 {
    let value = self.depth;
    self.depth = 0;
    value
}

fn get_alpha(&self) -> u32 {
    self.alpha
}

fn set_offset(&mut self, value: u32) {
    self.offset = value;
}

fn take_gamma(&mut self) -> u32 {
    let value = self.gamma;
    self.gamma = 0;
    value
}

fn clear_scale(&mut self) {
    self.scale = 0;
}

fn get_weight(&self) -> u32 {
    self.weight
}

fn set_length(&mut self, value: u32) {
    self.length = value;
}

fn clear_beta(&mut self) {
    self.beta = 0;
}

fn set_index(&mut self, value: u32) {
    self.index = value;
}

fn with_width(mut self, value: u32) -> Self {
    self.width = value;
    self
}

fn with_score(mut self, value: u32) -> Self {
    self.score = value;
    self
}

fn take_count(&mut self) -> u32 {
    let value = self.count;
    self.count = 0;
    value
}

fn take_total(&mut self) -> u32 {
    let value = self.total;
    self.total = 0;
    value
}

fn get_count(&self) -> u32 {
    self.count
}

fn clear_score(&mut self) {
    self.score = 0;
}

fn clear_width(&mut self) {
    self.width = 0;
}

fn get_offset(&self) -> u32 {
    self.offset
}

fn get_total(&self) -> u32 {
    self.total
}

fn clear_speed(&mut self) {
    self.speed = 0;
}

fn get_speed(&self) -> u32 {
    self.speed
}

fn set_level(&mut self, value: u32) {
    self.level = value;
}

fn get_limit(&self) -> u32 {
    self.limit
}

fn clear_weight(&mut self) {
    self.weight = 0;
}

fn with_length(mut self, value: u32) -> Self {
    self.length = value;
    self
}

fn with_gamma(mut self, value: u32) -> Self {
    self.gamma = value;
    self
}

fn set_height(&mut self, value: u32) {
    self.height = value;
}

fn get_depth(&self) -> u32 {
    self.depth
}

fn set_scale(&mut self, value: u32) {
    self.scale = value;
}

fn take_delta(&mut self) -> u32 {
    let value = self.delta;
    self.delta = 0;
    value
}

fn clear_total(&mut self) {
    self.total = 0;
}

fn clear_limit(&mut self) {
    self.limit = 0;
}

fn take_alpha(&mut self) -> u32 {
    let value = self.alpha;
    self.alpha = 0;
    value
}

fn take_weight(&mut self) -> u32 {
    let value = self.weight;
    self.weight = 0;
    value
}

fn take_level(&mut self) -> u32 {
    let value = self.level;
    self.level = 0;
    value
}

fn with_offset(mut self, value: u32) -> Self {
    self.offset = value;
    self
}

fn get_beta(&self) -> u32 {
    self.beta
}

fn with_count(mut self, value: u32) -> Self {
    self.count = value;
    self
}

fn take_width(&mut self) -> u32 {
    let value = self.width;
    self.width = 0;
    value
}

fn clear_delta(&mut self) {
    self.delta = 0;
}

fn with_beta(mut self, value: u32) -> Self {
    self.beta = value;
    self
}

fn clear_length(&mut self) {
    self.length = 0;
}

fn clear_ratio(&mut self) {
    self.ratio = 0;
}

fn take_limit(&mut self) -> u32 {
    let value = self.limit;
    self.limit = 0;
    value
}

fn take_height(&mut self) -> u32 {
    let value = self.height;
    self.height = 0;
    value
}

fn get_delta(&self) -> u32 {
    self.delta
}

fn clear_alpha(&mut self) {
    self.alpha = 0;
}

fn set_beta(&mut self, value: u32) {
    self.beta = value;
}

fn with_level(mut self, value: u32) -> Self {
    self.level = value;
    self
}

fn with_scale(mut self, value: u32) -> Self {
    self.scale = value;
    self
}

fn take_offset(&mut self) -> u32 {
    let value = self.offset;
    self.offset = 0;
    value
}

fn get_width(&self) -> u32 {
    self.width
}

fn clear_offset(&mut self) {
    self.offset = 0;
}

fn clear_angle(&mut self) {
    self.angle = 0;
}

fn set_score(&mut self, value: u32) {
    self.score = value;
}

fn set_depth(&mut self, value: u32) {
    self.depth = value;
}

fn with_angle(mut self, value: u32) -> Self {
    self.angle = value;
    self
}

fn set_angle(&mut self, value: u32) {
    self.angle = value;
}

fn with_alpha(mut self, value: u32) -> Self {
    self.alpha = value;
    self
}

fn get_scale(&self) -> u32 {
    self.scale
}

fn set_ratio(&mut self, value: u32) {
    self.ratio = value;
}

fn with_weight(mut self, value: u32) -> Self {
    self.weight = value;
    self
}

fn set_width(&mut self, value: u32) {
    self.width = value;
}

fn get_length(&self) -> u32 {
    self.length
}
