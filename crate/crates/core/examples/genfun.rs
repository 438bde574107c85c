//! Print the generating-function comparison report.
fn main() {
    let report = polyjoin_core::formula::genfun_check(12).expect("order >= 1");
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
