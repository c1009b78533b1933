fn label_width(&self) -> String {
    format!("width={}", self.width)
}

fn show_beta(&self) {
    println!("beta: {}", self.beta);
}

fn label_length(&self) -> String {
    format!("length={}", self.length)
}

fn debug_depth(&self) -> String {
    format!("[depth] value={}", self.depth)
}

fn show_total(&self) {
    println!("total: {}", self.total);
}

fn debug_gamma(&self) -> String {
    format!("[gamma] value={}", self.gamma)
}

fn label_speed(&self) -> String {
    format!("speed={}", self.speed)
}

fn label_alpha(&self) -> String {
    format!("alpha={}", self.alpha)
}

fn show_angle(&self) {
    println!("angle: {}", self.angle);
}

fn show_ratio(&self) {
    println!("ratio: {}", self.ratio);
}

fn label_index(&self) -> String {
    format!("index={}", self.index)
}

fn debug_score(&self) -> String {
    format!("[score] value={}", self.score)
}

fn debug_length(&self) -> String {
    format!("[length] value={}", self.length)
}

fn debug_offset(&self) -> String {
    format!("[offset] value={}", self.offset)
}

fn label_limit(&self) -> String {
    format!("limit={}", self.limit)
}

fn show_gamma(&self) {
    println!("gamma: {}", self.gamma);
}

fn show_index(&self) {
    println!("index: {}", self.index);
}

fn label_ratio(&self) -> String {
    format!("ratio={}", self.ratio)
}

fn show_height(&self) {
    println!("height: {}", self.height);
}

fn show_length(&self) {
    println!("length: {}", self.length);
}

fn label_height(&self) -> String {
    format!("height={}", self.height)
}

fn label_score(&self) -> String {
    format!("score={}", self.score)
}

fn label_level(&self) -> String {
    format!("level={}", self.level)
}

fn show_offset(&self) {
    println!("offset: {}", self.offset);
}

fn show_alpha(&self) {
    println!("alpha: {}", self.alpha);
}

fn debug_speed(&self) -> String {
    format!("[speed] value={}", self.speed)
}

fn debug_alpha(&self) -> String {
    format!("[alpha] value={}", self.alpha)
}

fn label_depth(&self) -> String {
    format!("depth={}", self.depth)
}

fn debug_height(&self) -> String {
    format!("[height] value={}", self.height)
}

fn debug_weight(&self) -> String {
    format!("[weight] value={}", self.weight)
}

fn debug_limit(&self) -> String {
    format!("[limit] value={}", self.limit)
}

fn label_weight(&self) -> String {
    format!("weight={}", self.weight)
}

fn debug_width(&self) -> String {
    format!("[width] value={}", self.width)
}

fn label_total(&self) -> String {
    format!("total={}", self.total)
}

fn debug_index(&self) -> String {
    format!("[index] value={}", self.index)
}

fn show_level(&self) {
    println!("level: {}", self.level);
}

fn debug_beta(&self) -> String {
    format!("[beta] value={}", self.beta)
}

fn label_offset(&self) -> String {
    format!("offset={}", self.offset)
}

fn debug_total(&self) -> String {
    format!("[total] value={}", self.total)
}

fn show_width(&self) {
    println!("width: {}", self.width);
}

fn label_count(&self) -> String {
    format!("count={}", self.count)
}

fn label_scale(&self) -> String {
    format!("scale={}", self.scale)
}

fn debug_ratio(&self) -> String {
    format!("[ratio] value={}", self.ratio)
}

fn show_limit(&self) {
    println!("limit: {}", self.limit);
}

fn debug_scale(&self) -> String {
    format!("[scale] value={}", self.scale)
}

fn show_weight(&self) {
    println!("weight: {}", self.weight);
}

fn show_speed(&self) {
    println!("speed: {}", self.speed);
}

fn show_score(&self) {
    println!("score: {}", self.score);
}

fn show_scale(&self) {
    println!("scale: {}", self.scale);
}

fn label_gamma(&self) -> String {
    format!("gamma={}", self.gamma)
}

fn debug_angle(&self) -> String {
    format!("[angle] value={}", self.angle)
}

fn label_delta(&self) -> String {
    format!("delta={}", self.delta)
}

fn debug_level(&self) -> String {
    format!("[level] value={}", self.level)
}

fn show_count(&self) {
    println!("count: {}", self.count);
}

fn debug_delta(&self) -> String {
    format!("[delta] value={}", self.delta)
}

fn show_depth(&self) {
    println!("depth: {}", self.depth);
}

fn label_beta(&self) -> String {
    format!("beta={}", self.beta)
}

fn show_delta(&self) {
    println!("delta: {}", self.delta);
}

fn debug_count(&self) -> String {
    format!("[count] value={}", self.count)
}

fn label_angle(&self) -> String {
    format!("angle={}", self.angle)
}
