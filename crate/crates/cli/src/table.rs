//! Two-column fixed-width tables for `--output table`.

use std::env;

/// Total table width when `LENSKNOT_TABLE_WIDTH` is unset or unparsable.
pub const DEFAULT_WIDTH: usize = 100;
pub const WIDTH_VAR: &str = "LENSKNOT_TABLE_WIDTH";

pub fn width_from_env() -> usize {
    env::var(WIDTH_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&w: &usize| w >= 20)
        .unwrap_or(DEFAULT_WIDTH)
}

#[derive(Default)]
pub struct Table {
    rows: Vec<(String, String)>,
}

impl Table {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn row(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.rows.push((key.into(), value.to_string()));
        self
    }

    /// Keys padded to a common width; values wrapped on character
    /// boundaries so no line exceeds `width`.
    pub fn render(&self, width: usize) -> String {
        let key_width = self
            .rows
            .iter()
            .map(|(k, _)| k.chars().count())
            .max()
            .unwrap_or(0);
        let value_width = width.saturating_sub(key_width + 3).max(8);
        let mut out = String::new();
        for (key, value) in &self.rows {
            let chars: Vec<char> = value.chars().collect();
            let mut chunks: Vec<String> = chars
                .chunks(value_width)
                .map(|c| c.iter().collect())
                .collect();
            if chunks.is_empty() {
                chunks.push(String::new());
            }
            for (i, chunk) in chunks.iter().enumerate() {
                let k = if i == 0 { key.as_str() } else { "" };
                let pad = key_width - k.chars().count();
                out.push_str(&format!("{k}{} | {chunk}\n", " ".repeat(pad)));
            }
        }
        out
    }
}
