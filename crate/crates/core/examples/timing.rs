use std::time::Instant;
fn main() {
    let t = Instant::now();
    let results = eisencalc::verify::run_verify(8);
    for r in &results { println!("{}", r.render()); }
    println!("rank 8 elapsed: {:?}", t.elapsed());
}
