//! Per-level edge centralities of complete binary trees of depth 2 to 7.

fn main() -> kemeny::Result<()> {
    for row in kemeny::experiments::table1()? {
        let cells: Vec<String> = row.levels.iter().map(|c| format!("{c:10.4}")).collect();
        println!("m = {}: {}", row.depth, cells.join(""));
    }
    Ok(())
}
