use std::fmt;

use super::PcGroupError;

/// A word in the generators: a sequence of `(generator, exponent)` letters,
/// generators 0-based.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Word {
    letters: Vec<(usize, i64)>,
}

impl Word {
    pub fn new(letters: Vec<(usize, i64)>) -> Self {
        Word { letters }
    }

    pub fn identity() -> Self {
        Word::default()
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Word {
            letters: exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| (i, e as i64))
                .collect(),
        }
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    /// Exponent vector if the word is already normal for exponent bound `p`:
    /// strictly increasing generators, exponents in `1..p`.
    pub fn as_normal(&self, ngens: usize, p: u32) -> Option<Vec<u32>> {
        let mut out = vec![0u32; ngens];
        let mut last: Option<usize> = None;
        for &(g, e) in &self.letters {
            if g >= ngens || e <= 0 || e >= p as i64 || last.is_some_and(|l| g <= l) {
                return None;
            }
            out[g] = e as u32;
            last = Some(g);
        }
        Some(out)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for &(g, e) in &self.letters {
            write!(f, "g{}", g + 1)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses `1`, `g2g1`, `g1^2*g3^-1`, `g2 g1^2`. Generators are 1-based in
/// the text.
pub fn parse_word(text: &str) -> Result<Word, PcGroupError> {
    let err = |detail: &str| PcGroupError::BadWord {
        word: text.to_string(),
        detail: detail.to_string(),
    };
    let t = text.trim();
    if t.is_empty() || t == "1" || t == "id" {
        return Ok(Word::identity());
    }
    let chars: Vec<char> = t.chars().collect();
    let mut i = 0;
    let mut letters = Vec::new();
    let number = |i: &mut usize, allow_sign: bool| -> Option<i64> {
        let start = *i;
        if allow_sign && *i < chars.len() && chars[*i] == '-' {
            *i += 1;
        }
        let digits_start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        if *i == digits_start {
            return None;
        }
        chars[start..*i].iter().collect::<String>().parse().ok()
    };
    while i < chars.len() {
        match chars[i] {
            '*' | ' ' | '\t' => {
                i += 1;
                continue;
            }
            'g' => {}
            _ => return Err(err("expected generator gN")),
        }
        i += 1;
        let idx = number(&mut i, false).ok_or_else(|| err("missing generator number"))?;
        if idx < 1 {
            return Err(err("generators are numbered from 1"));
        }
        let mut exp = 1;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            exp = number(&mut i, true).ok_or_else(|| err("missing exponent"))?;
        }
        letters.push((idx as usize - 1, exp));
    }
    Ok(Word::new(letters))
}
