//! Domino tiling counts by the Kasteleyn product and by a broken-profile
//! transfer matrix, and the per-site entropy approaching G/pi.

use subshift_lab::entropy::{count_dimer_tilings_kasteleyn, count_dimer_tilings_transfer, ln_big};

fn main() {
    // Catalan's constant
    let g = 0.915_965_594_177_219_015_f64;
    println!("   n  tilings of n x n                          ln(count)/n^2");
    for n in (2..=20).step_by(2) {
        let k = count_dimer_tilings_kasteleyn(n, n).unwrap();
        if n <= 12 {
            assert_eq!(k, count_dimer_tilings_transfer(n, n).unwrap());
        }
        println!("{n:>4}  {k:<40}  {:.6}", ln_big(&k) / (n * n) as f64);
    }
    println!("G/pi  {:.6}", g / std::f64::consts::PI);
}
