//! Quantum correlations of the two-qubit embedding: geometric discord and
//! negativity over the (p, s) parameter plane.
//!
//! Run with: cargo run --example discord_map

use nqs::correlations::{
    bloch_decompose, geometric_discord_a, geometric_discord_b, negativity, qq_embed, sweep_discord,
};

fn main() -> nqs::Result<()> {
    // The embedding maps |c_i> to |a_i> (x) |b_i> with local overlaps
    // sqrt(s); the global state stays superposition-free over the
    // nonorthogonal pair yet is discordant.
    let state = qq_embed(0.5, 0.5)?;
    let bloch = bloch_decompose(&state);
    println!("p = s = 0.5:");
    println!("  local Bloch vector x = {:?}", bloch.x.as_slice());
    println!("  correlation matrix T:\n{}", bloch.t);
    println!("  geometric discord (A) = {}", geometric_discord_a(&state));
    println!("  geometric discord (B) = {}", geometric_discord_b(&state));
    println!("  negativity            = {}", negativity(&state));

    // Coarse map of discord over the plane: zero on the s = 0 column and
    // the p = 0, 1 rows, positive inside, entanglement zero everywhere.
    let rows = sweep_discord(11, 11)?;
    println!("\ndiscord_A over (p down, s across):");
    print!("      ");
    for is in 0..11 {
        print!("s={:<7.3}", 0.99 * is as f64 / 10.0);
    }
    println!();
    for ip in 0..11 {
        print!("p={:<4.1}", ip as f64 / 10.0);
        for is in 0..11 {
            print!("{:<9.5}", rows[ip * 11 + is].discord_a);
        }
        println!();
    }

    let max = rows
        .iter()
        .max_by(|a, b| a.discord_a.total_cmp(&b.discord_a))
        .unwrap();
    println!(
        "\nmaximum discord {:.6} at p = {:.2}, s = {:.3}",
        max.discord_a, max.p, max.s
    );
    let worst_negativity = rows.iter().map(|row| row.negativity).fold(0.0f64, f64::max);
    println!("largest negativity on the grid: {worst_negativity:.2e} (zero: separable everywhere)");
    Ok(())
}
