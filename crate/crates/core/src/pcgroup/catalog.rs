//! Text catalog of power-commutator presentations.
//!
//! Grammar (UTF-8, line oriented, surrounding whitespace ignored):
//!
//! ```text
//! catalog  := (blank | comment | block)*
//! comment  := '#' any-text
//! block    := header relation* (blank | EOF)
//! header   := 'group' SP name SP 'prime' SP p SP 'ngens' SP n
//! relation := power | comm
//! power    := 'g' i '^' ('p' | p) SP? '=' SP? rhs
//! comm     := '[' 'g' j ',' SP? 'g' i ']' SP? '=' SP? rhs      (i < j)
//! rhs      := '1' | ('g' k ('^' e)?)+                            (k increasing, 0 < e < p)
//! ```
//!
//! `name` has no whitespace; generator indices are 1-based. Relations not
//! listed are trivial. Comment lines may appear inside blocks.

use super::{parse_word, PcGroup, PcGroupError, Presentation};

const BUILTIN: &str = include_str!("../../data/catalog.txt");

/// An ordered list of named presentations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalog {
    pub presentations: Vec<Presentation>,
}

impl Catalog {
    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.presentations.iter().map(|p| p.name.as_str())
    }

    pub fn presentation(&self, name: &str) -> Result<&Presentation, PcGroupError> {
        self.presentations
            .iter()
            .find(|p| p.name == name)
            .ok_or_else(|| PcGroupError::UnknownGroup(name.to_string()))
    }

    pub fn group(&self, name: &str) -> Result<PcGroup, PcGroupError> {
        PcGroup::new(self.presentation(name)?.clone())
    }

    pub fn groups(&self) -> Result<Vec<PcGroup>, PcGroupError> {
        self.presentations.iter().cloned().map(PcGroup::new).collect()
    }

    pub fn len(&self) -> usize {
        self.presentations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.presentations.is_empty()
    }
}

/// The catalog shipped with the crate.
pub fn builtin_catalog() -> Catalog {
    parse_catalog(BUILTIN).expect("builtin catalog parses")
}

pub fn parse_catalog(text: &str) -> Result<Catalog, PcGroupError> {
    let mut out = Vec::new();
    let mut current: Option<Presentation> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let err = |detail: &str| PcGroupError::Catalog {
            line: lineno + 1,
            detail: detail.to_string(),
        };
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            out.extend(current.take());
            continue;
        }
        match current.as_mut() {
            None => current = Some(parse_header(line).map_err(|d| err(&d))?),
            Some(pres) => parse_relation(pres, line).map_err(|d| err(&d))?,
        }
    }
    out.extend(current);
    let mut names: Vec<&str> = out.iter().map(|p| p.name.as_str()).collect();
    names.sort_unstable();
    if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
        return Err(PcGroupError::Catalog {
            line: 0,
            detail: format!("duplicate group name {}", w[0]),
        });
    }
    Ok(Catalog { presentations: out })
}

fn parse_header(line: &str) -> Result<Presentation, String> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    match parts.as_slice() {
        ["group", name, "prime", p, "ngens", n] => {
            let p: u32 = p.parse().map_err(|_| format!("bad prime {p:?}"))?;
            let n: usize = n.parse().map_err(|_| format!("bad generator count {n:?}"))?;
            Ok(Presentation::trivial_relations(name, p, n))
        }
        _ => Err("expected `group <name> prime <p> ngens <n>`".to_string()),
    }
}

fn parse_gen(s: &str, ngens: usize) -> Result<usize, String> {
    let idx: usize = s
        .trim()
        .strip_prefix('g')
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| format!("bad generator {s:?}"))?;
    if idx == 0 || idx > ngens {
        return Err(format!("generator {s} out of range"));
    }
    Ok(idx - 1)
}

fn parse_relation(pres: &mut Presentation, line: &str) -> Result<(), String> {
    let (lhs, rhs) = line.split_once('=').ok_or("relation needs `=`")?;
    let (lhs, rhs) = (lhs.trim(), rhs.trim());
    let word = parse_word(rhs).map_err(|e| e.to_string())?;
    let exps = word
        .as_normal(pres.ngens, pres.prime)
        .ok_or_else(|| format!("right-hand side {rhs:?} is not a normal word"))?;
    if let Some(inner) = lhs.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
        let (a, b) = inner.split_once(',').ok_or("commutator needs two generators")?;
        let (j, i) = (parse_gen(a, pres.ngens)?, parse_gen(b, pres.ngens)?);
        if i >= j {
            return Err("commutators are written [gj,gi] with i < j".to_string());
        }
        if exps[..=j].iter().any(|&e| e != 0) {
            return Err(format!("[g{},g{}] may only involve generators after g{}", j + 1, i + 1, j + 1));
        }
        pres.set_commutator(j, i, exps);
    } else {
        let (g, e) = lhs.split_once('^').ok_or("expected power or commutator")?;
        let i = parse_gen(g, pres.ngens)?;
        let e = e.trim();
        if e != "p" && e.parse::<u32>().ok() != Some(pres.prime) {
            return Err(format!("power relations use exponent p = {}", pres.prime));
        }
        if exps[..=i].iter().any(|&e| e != 0) {
            return Err(format!("g{}^p may only involve generators after g{}", i + 1, i + 1));
        }
        pres.set_power(i, exps);
    }
    Ok(())
}

/// Writes presentations in catalog format; only nontrivial relations are
/// listed. `parse_catalog(&write_catalog(c)) == c`.
pub fn write_catalog(catalog: &Catalog) -> String {
    let mut out = String::new();
    for pres in &catalog.presentations {
        let word = |w: &[u32]| super::Word::from_exponents(w).to_string();
        out.push_str(&format!("group {} prime {} ngens {}\n", pres.name, pres.prime, pres.ngens));
        for (i, w) in pres.power.iter().enumerate() {
            if w.iter().any(|&e| e != 0) {
                out.push_str(&format!("g{}^p = {}\n", i + 1, word(w)));
            }
        }
        for (j, row) in pres.commutator.iter().enumerate() {
            for (i, w) in row.iter().enumerate() {
                if w.iter().any(|&e| e != 0) {
                    out.push_str(&format!("[g{},g{}] = {}\n", j + 1, i + 1, word(w)));
                }
            }
        }
        out.push('\n');
    }
    out
}
