use omega_lyndon::oracle::InstanceGenerator;
use omega_lyndon::Alphabet;

const GOLDEN: &str = include_str!("golden/generator_seed1.txt");

fn render(count: usize) -> String {
    let alphabet = Alphabet::latin(2).unwrap();
    let stream = InstanceGenerator::new(1).stream().unwrap();
    stream.take(count).map(|i| i.to_line(&alphabet) + "\n").collect()
}

#[test]
fn seed_one_stream_matches_golden_file() {
    let lines = GOLDEN.lines().count();
    assert_eq!(render(lines), GOLDEN);
}

#[test]
fn golden_lines_reparse() {
    let alphabet = Alphabet::latin(2).unwrap();
    for line in GOLDEN.lines() {
        let (kind, literal) = line.split_once(' ').unwrap();
        match kind {
            "word" => assert_eq!(alphabet.format_word(&alphabet.parse_word(literal).unwrap()), literal),
            "infinite" => assert_eq!(alphabet.format_infinite(&alphabet.parse_infinite(literal).unwrap()), literal),
            "scheme" => {
                let s = omega_lyndon::PositionalScheme::parse(&alphabet, literal).unwrap();
                assert_eq!(s.format(&alphabet), literal);
            }
            other => panic!("unknown instance kind {other}"),
        }
    }
}
