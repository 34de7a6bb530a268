//! Post's tag system: single trajectories, the (100)^n table and a
//! checkpointed long run.

use seqforge::tag::{self, TagBudget, TagWord};

fn main() {
    let rules = tag::post_rules();
    let budget = TagBudget::default();
    for w in tag::trajectory_words(&TagWord::binary("1000").unwrap(), &rules, 10) {
        print!("{} ", if w.is_empty() { "ε".to_string() } else { w.to_string() });
    }
    println!();
    println!("sigma_2: {:?}", tag::trajectory(&tag::sigma(2), &rules, &budget));

    let rows = tag::classify_sigma_range(60, &budget);
    let dies: Vec<usize> = rows.iter().filter(|r| r.dies()).map(|r| r.n).collect();
    println!("n <= 60 with (100)^n dying: {dies:?}");
    let words: Vec<u64> = rows.iter().take(12).map(|r| r.words()).collect();
    println!("words before cycle or death: {words:?}");

    let dir = std::env::temp_dir().join("seqforge-tag-example.ck");
    let mut run = tag::LongRun::new(&tag::sigma(110), &rules);
    let status = run.run(2_000_000, Some((&dir, 500_000))).expect("checkpoint is writable");
    println!("(100)^110 after a short run: {status:?}, longest word {}", run.max_len());
    let resumed = tag::LongRun::load(&dir, &rules).expect("checkpoint reads back");
    println!("checkpoint holds step {}", resumed.steps());
    let _ = std::fs::remove_file(dir);
}
