//! Unicode super- and subscripts for printing exponents and labels.

const SUPER: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
const SUB: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];

fn map_digits(n: u64, table: &[char; 10]) -> String {
    n.to_string()
        .chars()
        .map(|d| table[d.to_digit(10).unwrap() as usize])
        .collect()
}

pub(crate) fn sup(n: u64) -> String {
    map_digits(n, &SUPER)
}

pub(crate) fn sub(n: u64) -> String {
    map_digits(n, &SUB)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits() {
        assert_eq!(sup(12), "¹²");
        assert_eq!(sub(0), "₀");
        assert_eq!(sub(305), "₃₀₅");
    }
}
