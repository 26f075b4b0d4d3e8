use crate::error::Error;
use crate::fermion::MolecularIntegrals;
use crate::scalar::{real, Real};
use crate::Result;

/// Parses an FCIDUMP stream: a namelist header carrying `NORB`/`NELEC`
/// terminated by `&END` (or `/`), followed by `value p q r s` lines with
/// 1-based indices. `p q 0 0` lines are one-electron integrals,
/// `0 0 0 0` is the nuclear-repulsion constant, anything else is the
/// chemist-notation `(pq|rs)` two-electron integral.
pub fn parse_fcidump<T: Real>(text: &str) -> Result<MolecularIntegrals<T>> {
    let mut lines = text.lines().enumerate();
    let mut header = String::new();
    let mut header_done = false;
    for (_, line) in lines.by_ref() {
        header.push_str(line);
        header.push(' ');
        let upper = line.to_uppercase();
        if upper.contains("&END") || upper.trim() == "/" || upper.trim().ends_with('/') {
            header_done = true;
            break;
        }
    }
    if !header_done {
        return Err(Error::Parse("FCIDUMP header not terminated by &END".into()));
    }
    let norb = extract_field(&header, "NORB")?
        .ok_or_else(|| Error::Parse("FCIDUMP header missing NORB".into()))?;
    let nelec = extract_field(&header, "NELEC")?
        .ok_or_else(|| Error::Parse("FCIDUMP header missing NELEC".into()))?;
    let mut mi = MolecularIntegrals::new(norb, nelec, T::zero());

    for (lineno, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let value: f64 = it
            .next()
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: non-numeric value", lineno + 1)))?;
        let idx: Vec<usize> = it
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("line {}: bad index '{tok}'", lineno + 1)))
            })
            .collect::<Result<_>>()?;
        if idx.len() != 4 {
            return Err(Error::Parse(format!(
                "line {}: expected 'value p q r s'",
                lineno + 1
            )));
        }
        let (p, q, r, s) = (idx[0], idx[1], idx[2], idx[3]);
        for &i in &[p, q, r, s] {
            if i > norb {
                return Err(Error::Parse(format!(
                    "line {}: orbital index {i} out of range (NORB = {norb})",
                    lineno + 1
                )));
            }
        }
        let v = real::<T>(value);
        match (p, q, r, s) {
            (0, 0, 0, 0) => mi.set_e_nuc(v),
            (p, q, 0, 0) if p > 0 && q > 0 => mi.set_h1(p - 1, q - 1, v),
            (p, q, r, s) if p > 0 && q > 0 && r > 0 && s > 0 => {
                mi.set_h2(p - 1, q - 1, r - 1, s - 1, v)
            }
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: unsupported index pattern {p} {q} {r} {s}",
                    lineno + 1
                )))
            }
        }
    }
    Ok(mi)
}

fn extract_field(header: &str, key: &str) -> Result<Option<usize>> {
    let upper = header.to_uppercase();
    let Some(pos) = upper.find(key) else {
        return Ok(None);
    };
    let rest = &upper[pos + key.len()..];
    let rest = rest.trim_start();
    let rest = rest
        .strip_prefix('=')
        .ok_or_else(|| Error::Parse(format!("malformed {key} field")))?;
    let digits: String = rest
        .trim_start()
        .chars()
        .take_while(|c| c.is_ascii_digit())
        .collect();
    if digits.is_empty() {
        return Err(Error::Parse(format!("malformed {key} field")));
    }
    Ok(Some(digits.parse().unwrap()))
}
