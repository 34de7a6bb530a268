//! Two-dimensional greedy arrays: the Nim-sum table, the infinite Sudoku
//! array with its main diagonal, and the spiral array with its spokes.

use seqforge::grid;

fn print_window(title: &str, a: &grid::QuarterPlaneArray) {
    println!("{title}");
    for m in 0..a.rows() {
        let row: Vec<String> = a.row(m).iter().map(|v| format!("{v:3}")).collect();
        println!("  {}", row.join(""));
    }
}

fn main() {
    print_window("Nim sums m xor n:", &grid::nim_sum_table(8, 8));
    let sudoku = grid::sudoku_array(8, 8);
    print_window("infinite Sudoku array:", &sudoku);
    println!("main diagonal: {:?}", grid::sudoku_main_diagonal(20));
    println!("audit of a 60x60 window: {:?}", grid::audit_quarter_plane(&grid::sudoku_array(60, 60)));

    let spiral = grid::spiral_array(20);
    let east: Vec<u32> = (0..12).map(|x| spiral.get(x, 0).unwrap()).collect();
    let west: Vec<u32> = (1..12).map(|x| spiral.get(-x, 0).unwrap()).collect();
    println!("spiral row through the centre, east: {east:?}");
    println!("                               west: {west:?}");
    println!("audit of the spiral: {:?}", grid::audit_spiral(&spiral));
}
