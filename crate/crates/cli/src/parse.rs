//! Complex literals of the form `1.5-2.25i`: real part first, then an
//! optionally signed imaginary part ending in `i`. Plain reals and pure
//! imaginaries (`3i`, `-i`) are accepted too. No internal whitespace.

use hyp2f1::ComplexScalar;

pub fn complex_literal(text: &str) -> Result<ComplexScalar, String> {
    let t = text.trim();
    if t.is_empty() {
        return Err("empty complex literal".into());
    }
    if !t.ends_with('i') && !t.ends_with('I') {
        return t
            .parse::<f64>()
            .map(|re| ComplexScalar::new(re, 0.0))
            .map_err(|_| bad(text));
    }
    let body = &t[..t.len() - 1];
    // The imaginary part starts at the last +/- that is neither the leading
    // sign nor an exponent sign, so `2.5-1e-4i` splits at the first minus.
    let bytes = body.as_bytes();
    let mut split = None;
    for i in (1..bytes.len()).rev() {
        if matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
            split = Some(i);
            break;
        }
    }
    match split {
        Some(i) => {
            let re: f64 = body[..i].parse().map_err(|_| bad(text))?;
            let im = imaginary_magnitude(&body[i..]).ok_or_else(|| bad(text))?;
            Ok(ComplexScalar::new(re, im))
        }
        None => {
            let im = imaginary_magnitude(body).ok_or_else(|| bad(text))?;
            Ok(ComplexScalar::new(0.0, im))
        }
    }
}

fn imaginary_magnitude(s: &str) -> Option<f64> {
    match s {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => s.parse().ok(),
    }
}

fn bad(text: &str) -> String {
    format!("cannot parse {text:?} as a complex number (expected forms: 1.5, -2i, 1.5-2.25i)")
}
