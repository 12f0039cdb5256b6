fn main() {
    let pi = qzeta_cli::parse::parse_diagram("2 1 / 1").unwrap();
    println!("rank = {}", pi.total_rank());
    for n in 1..=4u32 {
        for p in partitions::enumerate_pp(n) {
            println!("n={n}  {p}  rank {}", p.total_rank());
        }
    }
}
