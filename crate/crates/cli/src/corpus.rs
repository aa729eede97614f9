//! The bundled example corpus, compiled into the binary.

pub const CORPUS: [(&str, &str); 10] = [
    ("trivial", include_str!("../jobs/trivial.job")),
    ("sign_line", include_str!("../jobs/sign_line.job")),
    ("split_points", include_str!("../jobs/split_points.job")),
    ("swap_plane", include_str!("../jobs/swap_plane.job")),
    ("sl2", include_str!("../jobs/sl2.job")),
    ("torus_gm", include_str!("../jobs/torus_gm.job")),
    ("additive_ga", include_str!("../jobs/additive_ga.job")),
    ("heisenberg_lie", include_str!("../jobs/heisenberg_lie.job")),
    ("sl2_lie", include_str!("../jobs/sl2_lie.job")),
    ("double_swap", include_str!("../jobs/double_swap.job")),
];

pub fn find(name: &str) -> Option<&'static str> {
    CORPUS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
}
