"""Published code tables: every row is a derivative code (I | f_1(A) | ... ) over A = T_n(a, b, c)."""

from dataclasses import dataclass


@dataclass(frozen=True)
class TableFixture:
    table_id: int
    title: str
    q: int
    inner: str
    a: str
    b: str
    c: str
    require_fsd: bool
    rows: tuple
    # (n, hull dimension) for printed rows whose code is not LCD as stated
    deviations: tuple = ()

    def deviation_hull(self, n):
        return dict(self.deviations).get(n)


def _rows(*entries):
    return tuple((n, tuple(polys.split(";")), params) for n, polys, params in entries)


TABLES = {
    1: TableFixture(
        table_id=1,
        title="Binary Euclidean FSD LCD codes",
        q=2, inner="E", a="1", b="1", c="1", require_fsd=True,
        rows=_rows(
            (3, "x+1", (6, 3, 2)),
            (4, "x", (8, 4, 3)),
            (5, "x^2+x", (10, 5, 3)),
            (6, "x^3", (12, 6, 4)),
            (7, "x^2+x", (14, 7, 4)),
            (8, "x^2+x", (16, 8, 4)),
            (9, "x^8+x^5", (18, 9, 4)),
            (10, "x^5+x^4+x^3", (20, 10, 5)),
            (11, "x^9+x^8+x^7+x", (22, 11, 5)),
            (12, "x^9+x^8+x^4+x^3+x^2", (24, 12, 6)),
            (13, "x^12+x^11+x^7+x^4", (26, 13, 6)),
            (14, "x^12+x^11+x", (28, 14, 6)),
            (15, "x^14+x^13+x^12+x^10", (30, 15, 6)),
            (16, "x^15+x^12", (32, 16, 6)),
            (17, "x^14+x^10+x^7+x", (34, 17, 7)),
            (18, "x^15+x^13+x^11+x^10+x^9", (36, 18, 7)),
            (19, "x^15+x^13+x^10+x^9", (38, 19, 7)),
            (20, "x^13+x^11+x^8+x^5+x^4+x^2+x", (40, 20, 8)),
            (25, "x^15+x^11+x^10+x^8+x^7+x", (50, 25, 9)),
        ),
    ),
    2: TableFixture(
        table_id=2,
        title="Binary Euclidean LCD codes of index 3",
        q=2, inner="E", a="1", b="1", c="1", require_fsd=False,
        rows=_rows(
            (3, "x^2;x", (9, 3, 4)),
            (4, "x^2;x^2+x", (12, 4, 5)),
            (5, "x^3+x^2+1;x^3+x+1", (15, 5, 6)),
            (6, "x^5;x^5+x^4+x^3", (18, 6, 6)),
            (7, "x^5;x^5+x^4+x^3", (21, 7, 7)),
            (8, "x^5+1;x^4+x+1", (24, 8, 8)),
            (9, "x^5;x^5+x^4+x^3", (27, 9, 8)),
            (10, "x^5;x^5+x^4+x^2+x", (30, 10, 9)),
        ),
    ),
    3: TableFixture(
        table_id=3,
        title="Ternary Euclidean FSD LCD codes",
        q=3, inner="E", a="1", b="1", c="1", require_fsd=True,
        rows=_rows(
            (3, "x", (6, 3, 3)),
            (4, "x^2+2", (8, 4, 4)),
            (5, "x^2", (10, 5, 4)),
            (6, "x^5", (12, 6, 4)),
            (7, "2*x^5+x^3+x^2", (14, 7, 5)),
            (8, "2*x^7+x^2", (16, 8, 5)),
            (9, "2*x^8+2*x^3+x", (18, 9, 6)),
            (10, "2*x^8+x^6+x^5", (20, 10, 6)),
            (11, "x^10+x^8+x^7+x^6", (22, 11, 7)),
            (12, "x^10+x^8+x^7+x^5", (24, 12, 7)),
            (13, "2*x^11+x^9+x^8", (26, 13, 7)),
            (14, "x^13+x^12+2*x^11+x^8+x^7+2*x^5", (28, 14, 8)),
            (15, "2*x^12+x^10+2*x^9+x^8", (30, 15, 8)),
        ),
        deviations=((11, 2),),
    ),
    4: TableFixture(
        table_id=4,
        title="Ternary Euclidean LCD codes of index 3",
        q=3, inner="E", a="1", b="1", c="1", require_fsd=False,
        rows=_rows(
            (2, "x;x+1", (6, 2, 4)),
            (3, "x^2;2*x^2+x", (9, 3, 4)),
            (4, "x^3;x^2", (12, 4, 6)),
            (6, "x^5;2*x^5+x^3", (18, 6, 8)),
            (7, "x^6;2*x^5+x^3", (21, 7, 8)),
            (8, "x^7+2*x^6+x^2;2*x^7+2*x^3+1", (24, 8, 10)),
        ),
    ),
    5: TableFixture(
        table_id=5,
        title="Quaternary Hermitian FSD LCD codes",
        q=4, inner="H", a="1", b="w", c="w^2", require_fsd=True,
        rows=_rows(
            (2, "x", (4, 2, 2)),
            (4, "w*x^3+x^2", (8, 4, 4)),
            (6, "w*x^5+x^3", (12, 6, 5)),
            (8, "x^6+w*x^5+x", (16, 8, 6)),
            (10, "x^8+w*x^7+x^5+x^4+x^3", (20, 10, 7)),
            (12, "x^11+w^2*x^9+w*x^5+x^4", (24, 12, 8)),
        ),
    ),
    6: TableFixture(
        table_id=6,
        title="Quaternary Hermitian LCD codes of index 3",
        q=4, inner="H", a="1", b="w", c="w^2", require_fsd=False,
        rows=_rows(
            (2, "w*x+1;x+1", (6, 2, 4)),
            (3, "w*x^2+x;x^2+x+w", (9, 3, 6)),
            (4, "w*x^3+x^2;x^3+w*x^2+x", (12, 4, 7)),
            (5, "w*x^4+x^3+1;w*x^4+w^2*x^3+w*x+1", (15, 5, 8)),
            (6, "w*x^5+x^4;w*x^5+w^2*x^4+w^2*x^3+x", (18, 6, 9)),
            (7, "w*x^6+x^5;x^5+x^4+w*x^3+x^2", (21, 7, 10)),
        ),
    ),
}


def construction_line(fixture, n, polynomials):
    return (
        f"q={fixture.q} kind=T n={n} a={fixture.a} b={fixture.b} c={fixture.c} "
        f"inner={fixture.inner} f={';'.join(polynomials)}"
    )
