//! Frozen outputs for the part, deletion and translation examples.

use sn_core::embedding::translate;
use sn_core::polarity::{delete, parts, PartRef, Sign};
use sn_core::syntax::{f, seq};

/// One line per part: sign, address, subformula.
pub fn render_parts(s: &str) -> String {
    let s = seq(s);
    let lines: Vec<String> = parts(&s)
        .into_iter()
        .map(|(r, a)| format!("{} {r}  {a}", if r.sign == Sign::Pos { '+' } else { '-' }))
        .collect();
    lines.join("\n")
}

pub const PART_GOLDENS: &[(&str, &str)] = &[
    ("A |- B", "+ ant:/  A\n+ suc:/  B"),
    (
        "~~A |- ~~~~~B",
        "+ ant:/  ~~A
- ant:/neg  ~A
+ ant:/neg/neg  A
+ suc:/  ~~~~~B
- suc:/neg  ~~~~B
+ suc:/neg/neg  ~~~B
- suc:/neg/neg/neg  ~~B
+ suc:/neg/neg/neg/neg  ~B
- suc:/neg/neg/neg/neg/neg  B",
    ),
    (
        "~A & ~~B |- ~C | ~(B & ~A)",
        "+ ant:/  ~A & ~~B
+ ant:/and.left  ~A
- ant:/and.left/neg  A
+ ant:/and.right  ~~B
- ant:/and.right/neg  ~B
+ ant:/and.right/neg/neg  B
+ suc:/  ~C | ~(B & ~A)
+ suc:/or.left  ~C
- suc:/or.left/neg  C
+ suc:/or.right  ~(B & ~A)
- suc:/or.right/neg  B & ~A
- suc:/or.right/neg/and.left  B
- suc:/or.right/neg/and.right  ~A
+ suc:/or.right/neg/and.right/neg  A",
    ),
    (
        "~(B | (A -> A)) |- A | ~A",
        "+ ant:/  ~(B | (A -> A))
- ant:/neg  B | (A -> A)
- ant:/neg/or.left  B
- ant:/neg/or.right  A -> A
+ ant:/neg/or.right/imp.left  A
- ant:/neg/or.right/imp.right  A
+ suc:/  A | ~A
+ suc:/or.left  A
+ suc:/or.right  ~A
- suc:/or.right/neg  A",
    ),
];

/// Delete `A` from the antecedent, then `B` from the succedent.
pub fn deletion_example() -> String {
    let s = seq("A & C |- B | D");
    let s = delete(&s, &PartRef::parse_in("ant:/and.left", &s).unwrap()).unwrap();
    let s = delete(&s, &PartRef::parse_in("suc:/or.left", &s).unwrap()).unwrap();
    s.to_string()
}

pub const DELETION_GOLDEN: &str = "C |- D";

pub const TRANSLATION_INPUT: &str = "forall y. ~(exists x. ((x = 0 & y = s(0)) -> x = y))";
pub const TRANSLATION_GOLDEN: &str = "forall y. ~(exists x. ~(x = 0 & y = 1) | x = y)";

pub fn translation_example() -> String {
    translate(&f(TRANSLATION_INPUT)).to_string()
}

/// Every golden that differs from its frozen value.
pub fn golden_failures() -> Vec<String> {
    let mut bad = Vec::new();
    for (s, want) in PART_GOLDENS {
        let got = render_parts(s);
        if got != *want {
            bad.push(format!("parts of `{s}`:\n{got}"));
        }
    }
    let got = deletion_example();
    if got != DELETION_GOLDEN {
        bad.push(format!("deletion: {got}"));
    }
    let got = translation_example();
    if got != TRANSLATION_GOLDEN {
        bad.push(format!("translation: {got}"));
    }
    bad
}
