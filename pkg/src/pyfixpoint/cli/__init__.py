import typer

from pyfixpoint.__about__ import __version__
from .gallery import export, gallery
from .instance import certify, solve

app = typer.Typer(
    help="pyfixpoint, a certifier and solver for fixed points of monotone weak contractions on ordered partial metric spaces",
    no_args_is_help=True,
)

app.command()(certify)
app.command()(solve)
app.command()(gallery)
app.command()(export)


@app.command()
def version():
    """Show version info."""
    typer.echo(__version__)
