//! Reference term tables for the hyper-cubical diagonals C_d(n), d = 3..6,
//! transcribed once and frozen. C_3 is OEIS A271905. The `verify` command and
//! the acceptance suite recompute every entry from scratch and diff against
//! these tables.

use num_bigint::BigInt;

use crate::holonomic::BigSequence;

/// C_3(1..24).
pub const C3_TERMS: [&str; 24] = [
    "1",
    "6",
    "37",
    "240",
    "1621",
    "11256",
    "79717",
    "572928",
    "4164841",
    "30553116",
    "225817021",
    "1679454816",
    "12556853401",
    "94313192616",
    "711189994357",
    "5381592930816",
    "40848410792017",
    "310909645663332",
    "2372280474687277",
    "18141232682656320",
    "139010366280363601",
    "1067160872528170536",
    "8206301850166625797",
    "63203453697218605440",
];

/// C_4(1..19).
pub const C4_TERMS: [&str; 19] = [
    "1",
    "24",
    "997",
    "51264",
    "2940841",
    "180296088",
    "11559133741",
    "765337680384",
    "51921457661905",
    "3590122671128664",
    "252070718210663749",
    "17922684123178825536",
    "1287832671004683373753",
    "93368940577497932331288",
    "6821632357294515590873917",
    "501741975445243527381995520",
    "37121266623211130111114816929",
    "2760712710223967190110979892824",
    "206267049696409355312012281872181",
];

/// C_5(1..8).
pub const C5_TERMS: [&str; 8] = [
    "1",
    "120",
    "44121",
    "23096640",
    "14346274601",
    "9859397817600",
    "7244702262723241",
    "5582882474985676800",
];

/// C_6(1..6).
pub const C6_TERMS: [&str; 6] = [
    "1",
    "720",
    "2882071",
    "18754813440",
    "153480509680141",
    "1435747717722810960",
];

fn parse(terms: &[&str]) -> BigSequence {
    BigSequence::new(
        1,
        terms
            .iter()
            .map(|t| t.parse::<BigInt>().expect("golden table literal"))
            .collect(),
    )
}

/// The frozen table for dimension `d` (3..=6) as a 1-indexed sequence.
pub fn diagonal_terms(d: usize) -> BigSequence {
    match d {
        3 => parse(&C3_TERMS),
        4 => parse(&C4_TERMS),
        5 => parse(&C5_TERMS),
        6 => parse(&C6_TERMS),
        _ => panic!("no reference table for dimension {d}"),
    }
}
