"""Transcribed compatibility systems for the four double-extension variants.

Each system is a list of :class:`Line` objects named after the printed
display.  Chained equalities ``a = b = c`` are split into consecutive pairs.
Context names: ``delta`` (δ), ``D``, ``ds`` (δ*), ``G`` are the data maps,
``Dst``/``Gst`` their graded adjoints, ``a0``, ``b0``, ``c0`` vectors and
``alpha``, ``lam`` scalars.
"""

from __future__ import annotations

from ..exactla import sign
from ._common import Line


def _u(c, i):
    return c.basis(i)


def _pu(c, i):
    return sign(c.p(i))


def _Rs(c, x, u):
    return c.star(u, x)


def _Rc(c, x, u):
    return c.circ(u, x)


class _Builder:
    def __init__(self):
        self.lines = []

    def map(self, name, lhs, rhs):
        """A line quantified over u: lhs(c, u, i) = rhs(c, u, i)."""
        self.lines.append(Line(name, 1, lambda c, i: (lhs(c, _u(c, i), i), rhs(c, _u(c, i), i))))

    def const(self, name, lhs, rhs):
        self.lines.append(Line(name, 0, lambda c: (lhs(c), rhs(c))))

    def pair(self, name, lhs, rhs):
        self.lines.append(Line(name, 2, lambda c, i, j: (lhs(c, _u(c, i), _u(c, j)),
                                                         rhs(c, _u(c, i), _u(c, j)))))


def _Rc0_sum(c, u, i=None):
    """R∘_{c0}(u) + (R⋆_{c0})*(u)."""
    return _Rc(c, c.c0, u) + c.adj_right("star", c.c0)(u)


def _chain_uv(b: _Builder, display: str, terms):
    """Split a printed chain of bilinear terms into consecutive equalities."""
    for k in range(len(terms) - 1):
        b.pair(display, terms[k], terms[k + 1])


def _t_sG(c, u, v):
    return c.star(u, c.G(v))


def _t_cD(c, u, v):
    return c.circ(u, c.D(v))


def _t_msD(c, u, v):
    return -c.star(u, c.D(v))


def _t_mcG(c, u, v):
    return -c.circ(u, c.G(v))


def _t_sD(c, u, v):
    return c.star(u, c.D(v))


def _t_cG(c, u, v):
    return c.circ(u, c.G(v))


def _even_line_system(last_chain: str) -> list:
    b = _Builder()
    b.map("R∘_{c0} + (R⋆_{c0})* = D*∘G - G*∘D",
          _Rc0_sum, lambda c, u, i: c.Dst(c.G(u)) - c.Gst(c.D(u)))
    b.map("[G, δ*] = -G∘D + αG - R∘_{b0}",
          lambda c, u, i: c.G(c.ds(u)) - c.ds(c.G(u)),
          lambda c, u, i: -c.G(c.D(u)) + c.alpha * c.G(u) - _Rc(c, c.b0, u))
    b.map("G∘δ + δ*∘G = -G² - αG + R∘_{b0}",
          lambda c, u, i: c.G(c.delta(u)) + c.ds(c.G(u)),
          lambda c, u, i: -c.G(c.G(u)) - c.alpha * c.G(u) + _Rc(c, c.b0, u))
    b.map("[D, δ] = -D∘G - αD + R⋆_{b0}",
          lambda c, u, i: c.D(c.delta(u)) - c.delta(c.D(u)),
          lambda c, u, i: -c.D(c.G(u)) - c.alpha * c.D(u) + _Rs(c, c.b0, u))
    b.map("D∘δ* - δ∘G = -D² + αD + R⋆_{a0}",
          lambda c, u, i: c.D(c.ds(u)) - c.delta(c.G(u)),
          lambda c, u, i: -c.D(c.D(u)) + c.alpha * c.D(u) + _Rs(c, c.a0, u))
    b.map("G*∘D = -D*∘D", lambda c, u, i: c.Gst(c.D(u)), lambda c, u, i: -c.Dst(c.D(u)))
    b.map("δ∘D = -δ*∘D", lambda c, u, i: c.delta(c.D(u)), lambda c, u, i: -c.ds(c.D(u)))
    b.map("R⋆_{a0} + R∘_{a0} = -α(D+G)",
          lambda c, u, i: _Rs(c, c.a0, u) + _Rc(c, c.a0, u),
          lambda c, u, i: -c.alpha * (c.D(u) + c.G(u)))
    b.map("R∘_{c0} + (R⋆_{c0})* = D*∘G + G*∘G",
          _Rc0_sum, lambda c, u, i: c.Dst(c.G(u)) + c.Gst(c.G(u)))
    b.const("G(a0+b0) = 0", lambda c: c.G(c.a0 + c.b0), lambda c: c.zero)
    b.const("D*(a0+b0) = 0", lambda c: c.Dst(c.a0 + c.b0), lambda c: c.zero)
    b.const("(G*+D*)(a0) = -2αc0", lambda c: c.Gst(c.a0) + c.Dst(c.a0),
            lambda c: -2 * c.alpha * c.c0)
    b.const("(G+δ)(a0+b0) = 0", lambda c: c.G(c.a0 + c.b0) + c.delta(c.a0 + c.b0),
            lambda c: c.zero)
    b.const("(δ+δ*)(a0) = -α(a0+b0)", lambda c: c.delta(c.a0) + c.ds(c.a0),
            lambda c: -c.alpha * (c.a0 + c.b0))
    b.const("⟨a0+b0, c0⟩ = 0", lambda c: c.ip(c.a0 + c.b0, c.c0), lambda c: 0)
    b.const("⟨a0+b0, a0⟩ = 0", lambda c: c.ip(c.a0 + c.b0, c.a0), lambda c: 0)
    b.const("⟨a0+b0, b0⟩ = 0", lambda c: c.ip(c.a0 + c.b0, c.b0), lambda c: 0)
    b.const("(δ+D*)(c0) = G*(a0+b0)", lambda c: c.delta(c.c0) + c.Dst(c.c0),
            lambda c: c.Gst(c.a0 + c.b0))
    b.const("(δ*+G*)(c0) = -G*(a0) + D*(b0)", lambda c: c.ds(c.c0) + c.Gst(c.c0),
            lambda c: -c.Gst(c.a0) + c.Dst(c.b0))
    b.const("(δ*+G*)(c0) = (G*+D)(b0) - 2αc0", lambda c: c.ds(c.c0) + c.Gst(c.c0),
            lambda c: c.Gst(c.b0) + c.D(c.b0) - 2 * c.alpha * c.c0)
    b.const("D*(b0+c0) = 2αc0 - δ(c0) + G*(a0)", lambda c: c.Dst(c.b0 + c.c0),
            lambda c: 2 * c.alpha * c.c0 - c.delta(c.c0) + c.Gst(c.a0))
    b.map("D*∘G - G*∘D = G*∘G + D*∘G",
          lambda c, u, i: c.Dst(c.G(u)) - c.Gst(c.D(u)),
          lambda c, u, i: c.Gst(c.G(u)) + c.Dst(c.G(u)))
    if last_chain == "four":
        _chain_uv(b, "u⋆G(v) = u∘D(v) = -u⋆D(v) = -u∘G(v)", [_t_sG, _t_cD, _t_msD, _t_mcG])
    else:
        _chain_uv(b, "u⋆G(v) = u∘D(v) = -u⋆D(v)", [_t_sG, _t_cD, _t_msD])
        b.pair("u⋆D(v) = u∘G(v)", _t_sD, _t_cG)
    return b.lines


def _odd_line_tail(b: _Builder, ra0_sign: int):
    b.map("(δ*∘G - G∘δ*)(u) = (-1)^{|u|}(G∘D + R∘_{b0})(u)",
          lambda c, u, i: c.ds(c.G(u)) - c.G(c.ds(u)),
          lambda c, u, i: _pu(c, i) * (c.G(c.D(u)) + _Rc(c, c.b0, u)))
    b.map("(G∘δ + δ*∘G)(u) = (-1)^{|u|}(R∘_{b0} - G²)(u)",
          lambda c, u, i: c.G(c.delta(u)) + c.ds(c.G(u)),
          lambda c, u, i: _pu(c, i) * (_Rc(c, c.b0, u) - c.G(c.G(u))))
    name = ("(D∘δ* - δ∘G)(u) = -(-1)^{|u|}(D² + R⋆_{a0})(u)" if ra0_sign > 0 else
            "(D∘δ* - δ∘G)(u) = -(-1)^{|u|}(D² - R⋆_{a0})(u)")
    b.map(name, lambda c, u, i: c.D(c.ds(u)) - c.delta(c.G(u)),
          lambda c, u, i: -_pu(c, i) * (c.D(c.D(u)) + ra0_sign * _Rs(c, c.a0, u)))
    b.map("(D∘δ - δ∘D)(u) = (-1)^{|u|}(R⋆_{b0} - D∘G)(u)",
          lambda c, u, i: c.D(c.delta(u)) - c.delta(c.D(u)),
          lambda c, u, i: _pu(c, i) * (_Rs(c, c.b0, u) - c.D(c.G(u))))


def _even_form_odd_line_system() -> list:
    b = _Builder()
    b.map("R∘_{c0} + (R⋆_{c0})* = G*∘D + D*∘G",
          _Rc0_sum, lambda c, u, i: c.Gst(c.D(u)) + c.Dst(c.G(u)))
    b.map("δ∘D + δ*∘D = 0", lambda c, u, i: c.delta(c.D(u)) + c.ds(c.D(u)),
          lambda c, u, i: c.zero)
    b.const("D*(b0-c0) = -G*(a0) - δ(c0)", lambda c: c.Dst(c.b0 - c.c0),
            lambda c: -c.Gst(c.a0) - c.delta(c.c0))
    b.const("G*(a0+c0) + D*(b0) - δ*(c0) = 0",
            lambda c: c.Gst(c.a0 + c.c0) + c.Dst(c.b0) - c.ds(c.c0), lambda c: c.zero)
    b.const("G(a0-b0) = -2δ*(b0)", lambda c: c.G(c.a0 - c.b0), lambda c: -2 * c.ds(c.b0))
    b.const("(δ+D*)(c0) - G*(a0+b0) = 0",
            lambda c: c.delta(c.c0) + c.Dst(c.c0) - c.Gst(c.a0 + c.b0), lambda c: c.zero)
    b.const("(δ*+G*)(c0) = (G*-D*)(b0)", lambda c: c.ds(c.c0) + c.Gst(c.c0),
            lambda c: c.Gst(c.b0) - c.Dst(c.b0))
    b.const("⟨a0, a0+b0⟩ = 0", lambda c: c.ip(c.a0, c.a0 + c.b0), lambda c: 0)
    b.const("⟨a0-b0, c0⟩ = 2⟨a0, b0⟩", lambda c: c.ip(c.a0 - c.b0, c.c0),
            lambda c: 2 * c.ip(c.a0, c.b0))
    b.map("G*∘D + D*∘D = 0", lambda c, u, i: c.Gst(c.D(u)) + c.Dst(c.D(u)),
          lambda c, u, i: c.zero)
    b.map("G*∘D + D*∘G = D*∘G - G*∘G",
          lambda c, u, i: c.Gst(c.D(u)) + c.Dst(c.G(u)),
          lambda c, u, i: c.Dst(c.G(u)) - c.Gst(c.G(u)))
    b.const("(D-δ)(a0-b0) = 0", lambda c: c.D(c.a0 - c.b0) - c.delta(c.a0 - c.b0),
            lambda c: c.zero)
    b.const("(δ+δ*)(a0) = 0", lambda c: c.delta(c.a0) + c.ds(c.a0), lambda c: c.zero)
    b.const("D*(a0+b0) = 0", lambda c: c.Dst(c.a0 + c.b0), lambda c: c.zero)
    b.map("R⋆_{a0} + R∘_{a0} = 0", lambda c, u, i: _Rs(c, c.a0, u) + _Rc(c, c.a0, u),
          lambda c, u, i: c.zero)
    b.const("(D*+G*)(a0) = 0", lambda c: c.Dst(c.a0) + c.Gst(c.a0), lambda c: c.zero)
    _chain_uv(b, "u⋆G(v) = u∘D(v) = -u⋆D(v)", [_t_sG, _t_cD, _t_msD])
    b.const("⟨a0-b0, b0-c0⟩ = 0", lambda c: c.ip(c.a0 - c.b0, c.b0 - c.c0), lambda c: 0)
    b.pair("u∘D(v) = -u∘G(v)", _t_cD, _t_mcG)
    _odd_line_tail(b, +1)
    return b.lines


def _odd_form_odd_line_system() -> list:
    b = _Builder()
    b.map("R∘_{c0} + (R⋆_{c0})* = -G*∘D - D*∘G",
          _Rc0_sum, lambda c, u, i: -c.Gst(c.D(u)) - c.Dst(c.G(u)))
    b.map("δ∘D = -δ*∘D", lambda c, u, i: c.delta(c.D(u)), lambda c, u, i: -c.ds(c.D(u)))
    b.const("D*(b0-c0) = -G*(a0) + δ(c0)", lambda c: c.Dst(c.b0 - c.c0),
            lambda c: -c.Gst(c.a0) + c.delta(c.c0))
    b.const("G*(a0+c0) + D*(b0) = -δ*(c0)", lambda c: c.Gst(c.a0 + c.c0) + c.Dst(c.b0),
            lambda c: -c.ds(c.c0))
    b.const("G(a0+b0) = -2δ*(b0)", lambda c: c.G(c.a0 + c.b0), lambda c: -2 * c.ds(c.b0))
    b.const("(δ-D*)(c0) = G*(a0+b0)", lambda c: c.delta(c.c0) - c.Dst(c.c0),
            lambda c: c.Gst(c.a0 + c.b0))
    b.const("(δ*-G*)(c0) = (G*-D*)(b0)", lambda c: c.ds(c.c0) - c.Gst(c.c0),
            lambda c: c.Gst(c.b0) - c.Dst(c.b0))
    b.const("⟨a0, a0+b0⟩ = 0", lambda c: c.ip(c.a0, c.a0 + c.b0), lambda c: 0)
    b.const("⟨a0-b0, c0⟩ = 2⟨a0, b0⟩", lambda c: c.ip(c.a0 - c.b0, c.c0),
            lambda c: 2 * c.ip(c.a0, c.b0))
    b.map("G*∘D = -D*∘D", lambda c, u, i: c.Gst(c.D(u)), lambda c, u, i: -c.Dst(c.D(u)))
    b.map("G*∘D + D*∘G = -D*∘G - G*∘G",
          lambda c, u, i: c.Gst(c.D(u)) + c.Dst(c.G(u)),
          lambda c, u, i: -c.Dst(c.G(u)) - c.Gst(c.G(u)))
    b.const("(D-δ)(a0-b0) = 0", lambda c: c.D(c.a0 - c.b0) - c.delta(c.a0 - c.b0),
            lambda c: c.zero)
    b.const("(δ-δ*)(a0) = 0", lambda c: c.delta(c.a0) - c.ds(c.a0), lambda c: c.zero)
    b.const("D*(a0+b0) = 0", lambda c: c.Dst(c.a0 + c.b0), lambda c: c.zero)
    b.map("R⋆_{a0} = -R∘_{a0}", lambda c, u, i: _Rs(c, c.a0, u),
          lambda c, u, i: -_Rc(c, c.a0, u))
    b.const("(D*+G*)(a0) = 0", lambda c: c.Dst(c.a0) + c.Gst(c.a0), lambda c: c.zero)
    _chain_uv(b, "u⋆G(v) = u∘D(v) = -u⋆D(v)", [_t_sG, _t_cD, _t_msD])
    b.const("⟨a0, b0-c0⟩ = ⟨b0, b0+c0⟩", lambda c: c.ip(c.a0, c.b0 - c.c0),
            lambda c: c.ip(c.b0, c.b0 + c.c0))
    b.pair("u⋆D(v) = u∘G(v)", _t_sD, _t_cG)
    _odd_line_tail(b, -1)
    return b.lines


# ---------------------------------------------------------------------------
# reduced systems for Lie superalgebras

def _delta_antisymmetric(b: _Builder):
    b.map("δ anti-symmetric: δ* = -δ", lambda c, u, i: c.adj("delta")(u),
          lambda c, u, i: -c.delta(u))


def _even_line_lie_system() -> list:
    b = _Builder()
    b.map("[D, δ] = D² - αD - R⋆_{a0}",
          lambda c, u, i: c.D(c.delta(u)) - c.delta(c.D(u)),
          lambda c, u, i: c.D(c.D(u)) - c.alpha * c.D(u) - _Rs(c, c.a0, u))
    b.pair("D([u, v]) = u⋆D(v) - v⋆D(u)",
           lambda c, u, v: c.D(c.bullet(u, v)),
           lambda c, u, v: c.star(u, c.D(v)) - c.star(v, c.D(u)))
    b.pair("D(u)⋆v = u⋆δ(v) + δ(u)⋆v - δ(u⋆v)",
           lambda c, u, v: c.star(c.D(u), v),
           lambda c, u, v: c.star(u, c.delta(v)) + c.star(c.delta(u), v)
           - c.delta(c.star(u, v)))
    _delta_antisymmetric(b)
    return b.lines


def _odd_line_lie_common(b: _Builder):
    def br(c, i, j):
        u, v = c.basis(i), c.basis(j)
        return c.D(c.bullet(u, v)), c.star(u, c.D(v)) - sign(c.p(i) * c.p(j)) * c.star(v, c.D(u))

    b.lines.append(Line("D([u, v]) = u⋆D(v) - (-1)^{|u||v|} v⋆D(u)", 2, br))

    def second(c, i, j):
        u, v = c.basis(i), c.basis(j)
        s = sign(c.p(i))
        return (c.star(c.D(u), v),
                c.star(u, c.delta(v)) + s * c.star(c.delta(u), v) - s * c.delta(c.star(u, v)))

    b.lines.append(Line("D(u)⋆v = u⋆δ(v) + (-1)^{|u|}δ(u)⋆v - (-1)^{|u|}δ(u⋆v)", 2, second))
    b.map("δ² - L⋆_{a0} = 0", lambda c, u, i: c.delta(c.delta(u)) - c.star(c.a0, u),
          lambda c, u, i: c.zero)


def _even_form_odd_line_lie_system() -> list:
    b = _Builder()
    _odd_line_lie_common(b)

    def rs_diff(c, u, i):
        return c.adj_right("star", c.c0)(u) - _Rs(c, c.c0, u)

    b.map("(R⋆_{c0})* - R⋆_{c0} = D*∘D", rs_diff, lambda c, u, i: c.Dst(c.D(u)))
    b.map("D*∘D = R⋆_{a0}", lambda c, u, i: c.Dst(c.D(u)), lambda c, u, i: _Rs(c, c.a0, u))
    b.map("R⋆_{a0} = 0", lambda c, u, i: _Rs(c, c.a0, u), lambda c, u, i: c.zero)
    b.map("(δ∘D - D∘δ)(u) = (-1)^{|u|} D²(u)",
          lambda c, u, i: c.delta(c.D(u)) - c.D(c.delta(u)),
          lambda c, u, i: _pu(c, i) * c.D(c.D(u)))
    b.const("(D-δ)(a0) = 0", lambda c: c.D(c.a0) - c.delta(c.a0), lambda c: c.zero)
    b.const("D*(c0) = 0", lambda c: c.Dst(c.c0), lambda c: c.zero)
    b.const("δ(c0) = 0", lambda c: c.delta(c.c0), lambda c: c.zero)
    b.const("D*(a0) = 0", lambda c: c.Dst(c.a0), lambda c: c.zero)
    b.const("⟨a0, a0+c0⟩ = 0", lambda c: c.ip(c.a0, c.a0 + c.c0), lambda c: 0)
    _delta_antisymmetric(b)
    return b.lines


def _odd_form_odd_line_lie_system() -> list:
    b = _Builder()
    _odd_line_lie_common(b)

    def rs_diff(c, u, i):
        return c.adj_right("star", c.c0)(u) - _Rs(c, c.c0, u)

    b.map("(R⋆_{c0})* - R⋆_{c0} = D*∘D", rs_diff, lambda c, u, i: c.Dst(c.D(u)))
    b.map("D*∘D = 0", lambda c, u, i: c.Dst(c.D(u)), lambda c, u, i: c.zero)
    b.map("(D∘δ - δ∘D)(u) = (-1)^{|u|}(D²(u) - R⋆_{a0}(u))",
          lambda c, u, i: c.D(c.delta(u)) - c.delta(c.D(u)),
          lambda c, u, i: _pu(c, i) * (c.D(c.D(u)) - _Rs(c, c.a0, u)))
    b.const("D(a0) = 0", lambda c: c.D(c.a0), lambda c: c.zero)
    b.const("δ(a0) = 0", lambda c: c.delta(c.a0), lambda c: c.zero)
    b.const("2D*(a0) + (δ+D*)(c0) = 0",
            lambda c: 2 * c.Dst(c.a0) + c.delta(c.c0) + c.Dst(c.c0), lambda c: c.zero)
    b.const("(δ-D*)(c0) = 0", lambda c: c.delta(c.c0) - c.Dst(c.c0), lambda c: c.zero)
    b.const("⟨a0, a0⟩ = 0", lambda c: c.ip(c.a0, c.a0), lambda c: 0)
    b.const("⟨a0, c0⟩ = 0", lambda c: c.ip(c.a0, c.c0), lambda c: 0)
    _delta_antisymmetric(b)
    return b.lines


EVEN_FORM_EVEN_LINE = "even-form/even-line"
EVEN_FORM_ODD_LINE = "even-form/odd-line"
ODD_FORM_EVEN_LINE = "odd-form/even-line"
ODD_FORM_ODD_LINE = "odd-form/odd-line"
VARIANTS = (EVEN_FORM_EVEN_LINE, EVEN_FORM_ODD_LINE, ODD_FORM_EVEN_LINE, ODD_FORM_ODD_LINE)

SYSTEM_NAMES = {
    EVEN_FORM_EVEN_LINE: "desapp",
    EVEN_FORM_ODD_LINE: "odd double extension system",
    ODD_FORM_EVEN_LINE: "desapp2",
    ODD_FORM_ODD_LINE: "odd double extension system (odd form)",
}

COMPATIBILITY_SYSTEMS = {
    EVEN_FORM_EVEN_LINE: _even_line_system("four"),
    EVEN_FORM_ODD_LINE: _even_form_odd_line_system(),
    ODD_FORM_EVEN_LINE: _even_line_system("split"),
    ODD_FORM_ODD_LINE: _odd_form_odd_line_system(),
}

LIE_SYSTEMS = {
    EVEN_FORM_EVEN_LINE: _even_line_lie_system(),
    EVEN_FORM_ODD_LINE: _even_form_odd_line_lie_system(),
    ODD_FORM_EVEN_LINE: _even_line_lie_system(),
    ODD_FORM_ODD_LINE: _odd_form_odd_line_lie_system(),
}
