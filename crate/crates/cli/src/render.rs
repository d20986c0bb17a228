use clap::ValueEnum;
use serde::Serialize;
use wronski::{DividedSeries, Polynomial};

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Coefficients of `t^n / n!`, in brackets.
pub fn series_text(s: &DividedSeries<Polynomial>) -> String {
    let coeffs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", coeffs.join(", "))
}

/// Compact JSON with a trailing newline.
pub fn json_line<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("values serialize");
    s.push('\n');
    s
}

pub fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    let mut out = String::new();
    for l in items {
        out.push_str(&l);
        out.push('\n');
    }
    out
}
