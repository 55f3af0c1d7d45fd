use proptest::prelude::*;

use flatcert_core::{parse_word, Word};

fn word() -> impl Strategy<Value = Word> {
    let leaf = "[a-z][a-z0-9_]{0,3}".prop_map(Word::Gen);
    leaf.prop_recursive(5, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(l, r)| Word::Product(Box::new(l), Box::new(r))),
            (inner, -12i64..=12).prop_map(|(b, e)| Word::Power(Box::new(b), e)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rendered_words_reparse(w in word()) {
        prop_assert_eq!(parse_word(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn arbitrary_text_never_panics(text in "[ab()*^0-9 -]{0,16}") {
        if let Ok(w) = parse_word(&text) {
            prop_assert_eq!(parse_word(&w.to_string()).unwrap(), w);
        }
    }
}
