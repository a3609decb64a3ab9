from djtrudi.core import SkewDiagram
from djtrudi.paths import enumerate_tuples, PathTuple
from djtrudi.regions import project_pi, regions
from djtrudi.render import ascii_hpair, ascii_tuple, plot_report, svg_hpair, svg_tuple


def first_tuple(lam, n):
    return next(iter(enumerate_tuples(SkewDiagram(lam), n, "first")))


def test_ascii_tuple_shows_every_path():
    t = first_tuple((2, 2), 2)
    pic = ascii_tuple(t, 2)
    for i in range(len(t.paths)):
        assert str(i + 1) in pic
    assert ascii_tuple(PathTuple((), ()), 2) == ""


def test_ascii_tuple_draws_east_runs():
    # a two-cell column allows a run of two east steps
    d = SkewDiagram((1, 1))
    pics = [ascii_tuple(t, 2) for t in enumerate_tuples(d, 2, "all")]
    assert any("=" in p for p in pics)


def test_ascii_pair_marks_regions():
    n = 2
    for t in enumerate_tuples(SkewDiagram((2, 2)), n, "first"):
        h = project_pi(t, n)
        marked = regions(h, 1, "II")
        if marked:
            pic = ascii_hpair(h, marked)
            assert "#" in pic and "a" in pic and "b" in pic
            assert "#" not in ascii_hpair(h, [])
            return
    raise AssertionError("no pair with a II_1-region")


def test_svg_is_deterministic():
    t = first_tuple((2, 1), 2)
    a, b = svg_tuple(t, 2), svg_tuple(t, 2)
    assert a == b and b"<svg" in a
    h = project_pi(t, 2)
    assert svg_hpair(h, regions(h, 1, "II")) == svg_hpair(h, regions(h, 1, "II"))


def test_report_figure(tmp_path):
    rows = [{"shape": "2", "n": 2, "det_terms": 9, "signed_terms": 12, "first_terms": 10,
             "positive_terms": 9, "third_terms": 9, "tableau_terms": 9},
            {"shape": "2,2,2", "n": 2, "det_terms": 20, "signed_terms": 40, "first_terms": 30,
             "positive_terms": None, "third_terms": None, "tableau_terms": None}]
    out = tmp_path / "fig.svg"
    plot_report(rows, out)
    assert out.exists() and out.stat().st_size > 0
