use g2crystal::affine::Tower;
use g2crystal::cartan::dominant_weights;
use g2crystal::perfect::{check_perfect, listed_minimal_elements, minimal_elements};

#[test]
fn minimal_elements_match_the_listing() {
    let tower = Tower::build(7).unwrap();
    let mut counts = Vec::new();
    for l in 1..=7 {
        let found: Vec<_> = minimal_elements(tower.level(l).unwrap()).into_iter().map(|m| m.tableau).collect();
        assert_eq!(found, listed_minimal_elements(l), "level {l}");
        assert_eq!(found.len(), dominant_weights(l).len());
        counts.push(found.len());
    }
    assert_eq!(counts, vec![2, 4, 6, 9, 12, 16, 20]);
}

#[test]
fn levels_one_to_three_are_perfect() {
    let tower = Tower::build(3).unwrap();
    let mut sizes = Vec::new();
    for l in 1..=3 {
        let r = check_perfect(tower.level(l).unwrap());
        assert!(r.all_passed(), "{r:?}");
        assert_eq!(r.crystal_components, 1);
        assert_eq!(r.min_level, l as i32);
        sizes.push(r.square_size);
    }
    assert_eq!(sizes, vec![225, 8464, 133225]);
}
