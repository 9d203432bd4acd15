//! The Porter stemming algorithm (1980), steps 1a through 5b.
//!
//! Words of one or two letters are returned unchanged. Within each step the
//! longest matching suffix decides the rule; if that rule's condition fails
//! no other rule of the step fires.

/// Stem a lowercase alphabetic token.
pub fn porter_stem(word: &str) -> String {
    let mut b: Vec<u8> = word
        .bytes()
        .map(|c| c.to_ascii_lowercase())
        .filter(u8::is_ascii_alphabetic)
        .collect();
    if b.len() <= 2 {
        return String::from_utf8(b).expect("ascii");
    }
    step_1a(&mut b);
    step_1b(&mut b);
    step_1c(&mut b);
    step_2(&mut b);
    step_3(&mut b);
    step_4(&mut b);
    step_5a(&mut b);
    step_5b(&mut b);
    String::from_utf8(b).expect("ascii")
}

fn is_consonant(b: &[u8], i: usize) -> bool {
    match b[i] {
        b'a' | b'e' | b'i' | b'o' | b'u' => false,
        b'y' => i == 0 || !is_consonant(b, i - 1),
        _ => true,
    }
}

/// The measure m of `[C](VC)^m[V]`: the number of vowel-to-consonant
/// transitions.
fn measure(b: &[u8]) -> usize {
    let mut m = 0;
    let mut prev_vowel = false;
    for i in 0..b.len() {
        let cons = is_consonant(b, i);
        if prev_vowel && cons {
            m += 1;
        }
        prev_vowel = !cons;
    }
    m
}

fn has_vowel(b: &[u8]) -> bool {
    (0..b.len()).any(|i| !is_consonant(b, i))
}

fn ends_double_consonant(b: &[u8]) -> bool {
    let n = b.len();
    n >= 2 && b[n - 1] == b[n - 2] && is_consonant(b, n - 1)
}

/// *o: stem ends consonant-vowel-consonant and the final consonant is not
/// w, x, or y.
fn ends_cvc(b: &[u8]) -> bool {
    let n = b.len();
    n >= 3
        && is_consonant(b, n - 3)
        && !is_consonant(b, n - 2)
        && is_consonant(b, n - 1)
        && !matches!(b[n - 1], b'w' | b'x' | b'y')
}

fn ends_with(b: &[u8], suffix: &str) -> bool {
    b.len() > suffix.len() && b.ends_with(suffix.as_bytes())
}

/// Replace `suffix` with `replacement` if the measure of the remaining stem
/// exceeds `min_measure`. Returns true when the suffix matched, whether or
/// not the condition held.
fn replace_if(b: &mut Vec<u8>, suffix: &str, replacement: &str, min_measure: usize) -> bool {
    if !ends_with(b, suffix) {
        return false;
    }
    let stem_len = b.len() - suffix.len();
    if measure(&b[..stem_len]) > min_measure {
        b.truncate(stem_len);
        b.extend_from_slice(replacement.as_bytes());
    }
    true
}

fn step_1a(b: &mut Vec<u8>) {
    if b.ends_with(b"sses") {
        b.truncate(b.len() - 2);
    } else if b.ends_with(b"ies") {
        b.truncate(b.len() - 2);
    } else if b.ends_with(b"ss") {
        // unchanged
    } else if b.ends_with(b"s") {
        b.truncate(b.len() - 1);
    }
}

fn step_1b(b: &mut Vec<u8>) {
    if ends_with(b, "eed") {
        if measure(&b[..b.len() - 3]) > 0 {
            b.truncate(b.len() - 1);
        }
        return;
    }
    let removed = if ends_with(b, "ed") && has_vowel(&b[..b.len() - 2]) {
        b.truncate(b.len() - 2);
        true
    } else if ends_with(b, "ing") && has_vowel(&b[..b.len() - 3]) {
        b.truncate(b.len() - 3);
        true
    } else {
        false
    };
    if removed {
        if b.ends_with(b"at") || b.ends_with(b"bl") || b.ends_with(b"iz") {
            b.push(b'e');
        } else if ends_double_consonant(b) && !matches!(b[b.len() - 1], b'l' | b's' | b'z') {
            b.truncate(b.len() - 1);
        } else if measure(b) == 1 && ends_cvc(b) {
            b.push(b'e');
        }
    }
}

fn step_1c(b: &mut [u8]) {
    let n = b.len();
    if n >= 2 && b[n - 1] == b'y' && has_vowel(&b[..n - 1]) {
        b[n - 1] = b'i';
    }
}

fn step_2(b: &mut Vec<u8>) {
    // ordered longest suffix first so the longest match decides
    const RULES: &[(&str, &str)] = &[
        ("ization", "ize"),
        ("iveness", "ive"),
        ("fulness", "ful"),
        ("ousness", "ous"),
        ("ational", "ate"),
        ("tional", "tion"),
        ("biliti", "ble"),
        ("entli", "ent"),
        ("ousli", "ous"),
        ("ation", "ate"),
        ("alism", "al"),
        ("aliti", "al"),
        ("iviti", "ive"),
        ("enci", "ence"),
        ("anci", "ance"),
        ("izer", "ize"),
        ("abli", "able"),
        ("alli", "al"),
        ("ator", "ate"),
        ("eli", "e"),
    ];
    for (suffix, replacement) in RULES {
        if replace_if(b, suffix, replacement, 0) {
            return;
        }
    }
}

fn step_3(b: &mut Vec<u8>) {
    const RULES: &[(&str, &str)] = &[
        ("icate", "ic"),
        ("ative", ""),
        ("alize", "al"),
        ("iciti", "ic"),
        ("ical", "ic"),
        ("ness", ""),
        ("ful", ""),
    ];
    for (suffix, replacement) in RULES {
        if replace_if(b, suffix, replacement, 0) {
            return;
        }
    }
}

fn step_4(b: &mut Vec<u8>) {
    const SUFFIXES: &[&str] = &[
        "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent", "ion", "ism", "ate",
        "iti", "ous", "ive", "ize", "al", "er", "ic", "ou",
    ];
    for suffix in SUFFIXES {
        if ends_with(b, suffix) {
            let stem_len = b.len() - suffix.len();
            let condition = measure(&b[..stem_len]) > 1
                && (*suffix != "ion" || matches!(b[stem_len - 1], b's' | b't'));
            if condition {
                b.truncate(stem_len);
            }
            return;
        }
    }
}

fn step_5a(b: &mut Vec<u8>) {
    let n = b.len();
    if n >= 2 && b[n - 1] == b'e' {
        let stem = &b[..n - 1];
        let m = measure(stem);
        if m > 1 || (m == 1 && !ends_cvc(stem)) {
            b.truncate(n - 1);
        }
    }
}

fn step_5b(b: &mut Vec<u8>) {
    if measure(b) > 1 && ends_double_consonant(b) && b[b.len() - 1] == b'l' {
        b.truncate(b.len() - 1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn spec_examples() {
        assert_eq!(porter_stem("caresses"), "caress");
        assert_eq!(porter_stem("ponies"), "poni");
        assert_eq!(porter_stem("collecting"), "collect");
    }

    #[test]
    fn shipped_vocabulary() {
        for (word, expected) in fixtures::porter_vectors() {
            assert_eq!(porter_stem(word), *expected, "stem({word:?})");
        }
    }

    #[test]
    fn idempotent_on_own_outputs() {
        for (word, _) in fixtures::porter_vectors() {
            let once = porter_stem(word);
            assert_eq!(porter_stem(&once), once, "restem({word:?})");
        }
    }

    #[test]
    fn short_words_unchanged() {
        assert_eq!(porter_stem("as"), "as");
        assert_eq!(porter_stem("is"), "is");
        assert_eq!(porter_stem("a"), "a");
    }
}
