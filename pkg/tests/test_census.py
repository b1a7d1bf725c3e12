import pytest

from altnf.census import census_solutions, same_orbit
from altnf.errors import BudgetExhaustedError, InvalidDegreeError
from altnf.perm import parse_perm, three_cycle
from altnf.presentation import check_assignment, generates_alternating


@pytest.fixture(scope="module")
def reports():
    return {n: census_solutions(n) for n in (5, 6, 7)}


def test_orbit_counts(reports):
    assert reports[5].stats["orbits"] == 1
    assert reports[6].stats["orbits"] == 2
    assert reports[7].stats["orbits"] == 1


def test_alternating_conjugacy_doubles(reports):
    # generating tuples have trivial stabilizer, so each S_n-orbit is two A_n-orbits
    for n, r in reports.items():
        assert r.stats["orbits_an"] == 2 * r.stats["orbits"]


def test_solution_totals(reports):
    assert reports[5].stats["solutions"] == 120
    assert reports[6].stats["solutions"] == 2 * 720
    assert reports[7].stats["solutions"] == 5040


def test_representatives_are_solutions(reports):
    for n, r in reports.items():
        for rep in r.stats["representatives_an"]:
            perms = [parse_perm(c, n) for c in rep]
            assert check_assignment(perms, n).passed
            assert generates_alternating([p.images for p in perms], n)


def test_standard_tuple_in_representative_orbit(reports):
    n = 5
    std = [three_cycle(i, n) for i in range(1, n - 1)]
    (rep,) = reports[n].stats["representatives"]
    assert same_orbit(std, [parse_perm(c, n) for c in rep], n)
    assert reports[n].stats["standard_orbit"] == 0


def test_a6_second_class_not_conjugate_to_standard(reports):
    n = 6
    std = [three_cycle(i, n) for i in range(1, n - 1)]
    other = [parse_perm(c, n) for c in reports[n].stats["representatives"][1]]
    assert not same_orbit(std, other, n)


def test_range_and_budget_errors():
    with pytest.raises(InvalidDegreeError):
        census_solutions(4)
    with pytest.raises(InvalidDegreeError):
        census_solutions(8)
    with pytest.raises(BudgetExhaustedError):
        census_solutions(6, budget=100)
