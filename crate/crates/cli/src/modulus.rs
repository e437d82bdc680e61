//! Integer polynomials given on the command line, either as a JSON list of
//! coefficients (low to high) or as text like `t^3 - t - 1`.

pub fn parse_modulus(s: &str) -> Result<Vec<i64>, String> {
    let s = s.trim();
    if s.starts_with('[') {
        let coeffs: Vec<i64> =
            serde_json::from_str(s).map_err(|e| format!("bad coefficient list {s:?}: {e}"))?;
        return trim(coeffs, s);
    }
    let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let text = text.replace('−', "-");
    if text.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut coeffs: Vec<i64> = Vec::new();
    let mut rest = text.as_str();
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let (term, tail) = body.split_at(end);
        let (c, e) = parse_term(term).ok_or_else(|| format!("cannot read term {term:?} in {s:?}"))?;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, 0);
        }
        coeffs[e] += sign * c;
        rest = tail;
    }
    trim(coeffs, s)
}

fn trim(mut coeffs: Vec<i64>, s: &str) -> Result<Vec<i64>, String> {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    if coeffs.is_empty() {
        return Err(format!("{s:?} is the zero polynomial"));
    }
    Ok(coeffs)
}

/// `3`, `t`, `3t`, `3*t^2`, `t^4` → (coefficient, exponent).
fn parse_term(term: &str) -> Option<(i64, usize)> {
    let Some(var) = term.find(|c: char| c.is_ascii_alphabetic()) else {
        return Some((term.parse().ok()?, 0));
    };
    let (coef, power) = term.split_at(var);
    let coef = coef.strip_suffix('*').unwrap_or(coef);
    let c = if coef.is_empty() { 1 } else { coef.parse().ok()? };
    let exp = match &power[1..] {
        "" => 1,
        e => e.strip_prefix('^')?.parse().ok()?,
    };
    Some((c, exp))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_list_forms_agree() {
        assert_eq!(parse_modulus("t^3-2").unwrap(), vec![-2, 0, 0, 1]);
        assert_eq!(parse_modulus("[-2, 0, 0, 1]").unwrap(), vec![-2, 0, 0, 1]);
        assert_eq!(parse_modulus("t^3 - t - 1").unwrap(), vec![-1, -1, 0, 1]);
        assert_eq!(parse_modulus("2*t^2+3t+t^2").unwrap(), vec![0, 3, 3]);
        assert_eq!(parse_modulus("t^2 + 1").unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_modulus("t^^3").is_err());
        assert!(parse_modulus("t - t").is_err());
        assert!(parse_modulus("[1, x]").is_err());
        assert!(parse_modulus("").is_err());
    }
}
