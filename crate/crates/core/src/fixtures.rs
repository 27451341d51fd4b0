//! Bundled xyz-only maximally anticommuting sets of sizes 3, 9 and 17.

use crate::pauli::{parse_set_lines, PauliSet};

pub const M1_TEXT: &str = include_str!("../data/m1.txt");
pub const M4_TEXT: &str = include_str!("../data/m4.txt");
pub const M8_TEXT: &str = include_str!("../data/m8.txt");

fn load(text: &str, n: usize) -> PauliSet {
    parse_set_lines(text, Some(n)).expect("bundled fixture parses")
}

/// `{x, y, z}`.
pub fn m1() -> PauliSet {
    load(M1_TEXT, 1)
}

/// Nine elements over four factors.
pub fn m4() -> PauliSet {
    load(M4_TEXT, 4)
}

/// Seventeen elements over eight factors.
pub fn m8() -> PauliSet {
    load(M8_TEXT, 8)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anticommuting::{is_maximally_anticommuting, verify_maximum_structure};
    use sha2::{Digest, Sha256};

    fn hex(text: &str) -> String {
        Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
    }

    #[test]
    fn checksums() {
        assert_eq!(hex(M1_TEXT), "824724371e87f6c025290a94b18128be027c41ca8c1939b101a480b98ccfe1ff");
        assert_eq!(hex(M4_TEXT), "fec8348c6c2468726c116aeb27ce083290fbafb69132ba3651168d70584bae6a");
        assert_eq!(hex(M8_TEXT), "f99b8ccc07ebce47346ffea11595e2dec245e510d7405dc2df9d4cac03fa5280");
    }

    #[test]
    fn fixtures_are_xyz_maximal() {
        for (s, size) in [(m1(), 3), (m4(), 9), (m8(), 17)] {
            assert_eq!(s.len(), size);
            assert!(s.is_xyz_only());
            assert!(is_maximally_anticommuting(&s).unwrap());
        }
        for s in [m4(), m8()] {
            verify_maximum_structure(&s).unwrap();
        }
    }
}
