use waypoint_core::io::parse_instance;
use waypoint_core::oracle::{solve_exhaustive, Limits};
use waypoint_core::solvers::{greedy_baseline, solve_single_waypoint, SingleMethod};
use waypoint_core::Rational;

#[test]
fn greedy_trap_costs() {
    let inst = parse_instance(include_str!("fixtures/greedy_trap.wrp")).unwrap();
    for m in [SingleMethod::Suurballe, SingleMethod::Flow] {
        let sol = solve_single_waypoint(&inst, m).unwrap().unwrap();
        assert_eq!(sol.total_cost, Rational::from_int(6), "{m}");
    }
    assert_eq!(
        greedy_baseline(&inst).unwrap().unwrap().total_cost,
        Rational::from_int(8)
    );
    assert_eq!(
        solve_exhaustive(&inst, Limits::default()).cost(),
        Some(Rational::from_int(6))
    );
}
