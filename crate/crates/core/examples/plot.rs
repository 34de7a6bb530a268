//! Writes a scatter plot of the EKG sequence and a pin plot of tag-system
//! step counts to the current directory.

use seqforge::plot::{self, PlotOptions, PlotStyle};
use seqforge::seq::{self, index_terms};
use seqforge::tag::{self, TagBudget};

fn main() {
    let ekg = seq::take("A064413", 1000).unwrap();
    let opts = PlotOptions { title: "A064413".into(), ..PlotOptions::default() };
    std::fs::write("ekg.svg", plot::render_svg(&ekg, &opts).unwrap()).unwrap();

    let rows = tag::classify_sigma_range(60, &TagBudget::default());
    let steps = index_terms(1, rows.iter().map(|r| r.outcome.steps));
    let opts = PlotOptions { style: PlotStyle::Pin, log_y: true, title: "steps for (100)^n".into(), ..PlotOptions::default() };
    std::fs::write("sigma_steps.svg", plot::render_svg(&steps, &opts).unwrap()).unwrap();
    println!("wrote ekg.svg and sigma_steps.svg");
}
