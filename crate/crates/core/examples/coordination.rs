//! Coordination sequences of the square grid, the Cairo tiling and the
//! bundled Ammann-Beenker patch.

use seqforge::coord;

fn main() {
    let square = coord::coordination_sequence(&coord::square_grid(), 0, 10).unwrap();
    println!("square grid: {:?}", square.terms);
    let cairo = coord::cairo_graph();
    for label in ["Q0", "T00"] {
        let s = coord::coordination_sequence(&cairo, cairo.vertex(label).unwrap(), 20).unwrap();
        println!("Cairo {label} (degree {}): {:?}", cairo.degree(cairo.vertex(label).unwrap()), s.terms);
    }
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/ammann_beenker_center.patch");
    let patch = coord::load_patch(std::path::Path::new(path)).unwrap();
    let s = coord::patch_coordination(&patch, patch.radius_valid()).unwrap();
    println!("Ammann-Beenker ({} vertices, valid to distance {}): {:?}", patch.vertex_count(), patch.radius_valid(), s.terms);
}
