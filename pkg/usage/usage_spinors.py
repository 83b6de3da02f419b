import logging

import dash
import numpy as np
from dash import callback, dcc, html, Input, Output

from spinorkit import SpinorKitError, Signature, build_representation, spinor_types
from spinorkit.cli import LOG_FORMAT

logging.basicConfig(format=LOG_FORMAT, level=logging.WARNING)
logger = logging.getLogger(__name__)

app = dash.Dash(__name__)

app.layout = html.Div(
    [
        html.H3("Spinor inspector"),
        html.Label("p"),
        dcc.Input(id="p", type="number", min=0, max=8, value=3),
        html.Label("q"),
        dcc.Input(id="q", type="number", min=0, max=8, value=1),
        html.Div(id="spinor-summary"),
        html.Pre(id="gamma-matrices"),
    ],
    className="container",
)


def format_matrix(matrix):
    def entry(z):
        z = complex(np.round(z, 12))
        if z.imag == 0:
            return f"{z.real:g}"
        if z.real == 0:
            return f"{z.imag:g}i"
        return f"{z.real:g}{z.imag:+g}i"

    return "\n".join("  ".join(f"{entry(z):>6}" for z in row) for row in matrix)


def summarize(p, q):
    """Spinor report for C(p,q) and the printed gamma matrices."""
    sig = Signature(int(p), int(q))
    report = spinor_types(sig)
    rep = build_representation(sig)
    summary = [
        f"C{sig}: Dirac spinors have {report.dirac_dimension} complex components",
        f"Weyl spinors: {'yes' if report.weyl_defined else 'no'}",
        f"Majorana spinors: {'yes' if report.majorana_exists else 'no'}",
        f"Weyl-Majorana spinors: {'yes' if report.weyl_majorana_exists else 'no'}",
    ]
    if rep.conjugation is not None:
        summary.append(f"conjugation: η = {rep.conjugation.eta:+d}, c² = {rep.conjugation.c_squared:+d}")
    gammas = "\n\n".join(
        f"γ^{mu}\n{format_matrix(gamma)}" for mu, gamma in enumerate(rep.gammas)
    )
    return summary, gammas


@callback(
    Output("spinor-summary", "children"),
    Output("gamma-matrices", "children"),
    Input("p", "value"),
    Input("q", "value"),
)
def inspect(p, q):
    if p is None or q is None:
        return "enter a signature", ""
    try:
        summary, gammas = summarize(p, q)
    except SpinorKitError as exc:
        logger.warning("cannot inspect (%s,%s): %s", p, q, exc)
        return str(exc), ""
    return [html.P(line) for line in summary], gammas


if __name__ == "__main__":
    app.run(debug=True)
