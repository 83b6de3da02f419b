import logging

import dash
from dash import callback, dcc, html, Input, Output

from spinorkit.cli import LOG_FORMAT
from spinorkit.tables import FAMILIES, generate_table, HEADERS

logging.basicConfig(format=LOG_FORMAT, level=logging.WARNING)

app = dash.Dash(__name__)

app.layout = html.Div(
    [
        html.H3("Clifford algebra classification"),
        dcc.Dropdown(
            id="family",
            options=[{"label": family.title(), "value": family} for family in FAMILIES],
            value="euclidean",
            clearable=False,
        ),
        dcc.RangeSlider(id="n-range", min=1, max=16, step=1, value=[4, 11]),
        html.Div(id="classification-table"),
    ],
    className="container",
)


def table_rows(family, n_min, n_max):
    """Header plus one list of cell strings per n."""
    rows = generate_table(family, n_min, n_max)
    return [list(HEADERS[family])] + [list(row.cells()) for row in rows]


@callback(
    Output("classification-table", "children"),
    Input("family", "value"),
    Input("n-range", "value"),
)
def render_table(family, n_range):
    header, *body = table_rows(family, n_range[0], n_range[1])
    return html.Table(
        [html.Thead(html.Tr([html.Th(cell) for cell in header]))]
        + [html.Tbody([html.Tr([html.Td(cell) for cell in row]) for row in body])],
        className="classification-table",
    )


if __name__ == "__main__":
    app.run(debug=True)
