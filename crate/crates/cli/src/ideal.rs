//! Ideal arguments: `sqrt5`, an integer `m`, or `a,b` for `a + bφ`.

use golden_core::{GoldenInt, PrincipalIdeal};

pub fn parse_ideal(text: &str) -> Result<PrincipalIdeal, String> {
    let text = text.trim();
    let generator = if text.eq_ignore_ascii_case("sqrt5") {
        GoldenInt::sqrt5()
    } else if let Some((a, b)) = text.split_once(',') {
        let a: i64 = a.trim().parse().map_err(|_| format!("bad coefficient {a:?} in {text:?}"))?;
        let b: i64 = b.trim().parse().map_err(|_| format!("bad coefficient {b:?} in {text:?}"))?;
        GoldenInt::new(a, b)
    } else {
        let m: i64 = text.parse().map_err(|_| format!("expected sqrt5, an integer or a,b; got {text:?}"))?;
        GoldenInt::from_int(m)
    };
    PrincipalIdeal::new(generator).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        assert!(parse_ideal("sqrt5").unwrap().same_ideal(&PrincipalIdeal::sqrt5()));
        // √5 = 2φ − 1.
        assert!(parse_ideal("-1,2").unwrap().same_ideal(&PrincipalIdeal::sqrt5()));
        assert!(parse_ideal(" 3 ").unwrap().same_ideal(&PrincipalIdeal::from_int(3).unwrap()));
        assert!(parse_ideal("0").is_err());
        assert!(parse_ideal("x").is_err());
        assert!(parse_ideal("1,y").is_err());
    }
}
