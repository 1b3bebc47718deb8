use std::sync::OnceLock;

use crate::error::{HalgError, Result};

/// Global computation bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    pub degree_min: i32,
    pub degree_max: i32,
    pub word_cap: usize,
    pub poly_cap: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { degree_min: -8, degree_max: 8, word_cap: 6, poly_cap: 12 }
    }
}

impl Limits {
    /// Reads `HALG_DEGREE_WINDOW` (`"lo..hi"` or `"lo,hi"`) and `HALG_WORD_CAP`.
    pub fn from_env() -> Result<Self> {
        let mut l = Limits::default();
        if let Ok(w) = std::env::var("HALG_DEGREE_WINDOW") {
            let (lo, hi) = parse_window(&w)?;
            l.degree_min = lo;
            l.degree_max = hi;
        }
        if let Ok(c) = std::env::var("HALG_WORD_CAP") {
            l.word_cap = c
                .trim()
                .parse()
                .map_err(|_| HalgError::Parse(format!("HALG_WORD_CAP: {c:?}")))?;
        }
        Ok(l)
    }

    pub fn check_degree(&self, degree: i32) -> Result<()> {
        if degree < self.degree_min || degree > self.degree_max {
            return Err(HalgError::DegreeWindow {
                degree,
                min: self.degree_min,
                max: self.degree_max,
            });
        }
        Ok(())
    }

    pub fn check_word(&self, len: usize) -> Result<()> {
        if len > self.word_cap {
            return Err(HalgError::WordCap { len, cap: self.word_cap });
        }
        Ok(())
    }

    pub fn check_poly(&self, degree: u32) -> Result<()> {
        if degree > self.poly_cap {
            return Err(HalgError::PolyCap { degree, cap: self.poly_cap });
        }
        Ok(())
    }
}

pub fn parse_window(text: &str) -> Result<(i32, i32)> {
    let bad = || HalgError::Parse(format!("degree window {text:?}"));
    let (a, b) = text
        .split_once("..")
        .or_else(|| text.split_once(','))
        .ok_or_else(bad)?;
    let lo: i32 = a.trim().parse().map_err(|_| bad())?;
    let hi: i32 = b.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

static LIMITS: OnceLock<Limits> = OnceLock::new();

/// Process-wide limits; a malformed environment falls back to the defaults.
pub fn limits() -> &'static Limits {
    LIMITS.get_or_init(|| Limits::from_env().unwrap_or_default())
}
