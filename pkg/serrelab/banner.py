"""Title panel shown when serrelab runs without a subcommand."""
import pyfiglet
from rich.console import Console
from rich.panel import Panel
from rich.text import Text

from serrelab import __version__

console = Console()

TAGLINE = "Serre weights, tame types and their bookkeeping"


def show_banner(font: str = "slant") -> None:
    """Print the title, version and a pointer to the command list."""
    title = Text(pyfiglet.figlet_format("SerreLab", font=font), style="bold")
    title.append(f"{TAGLINE}  v{__version__}\n", style="cyan")
    title.append("Run `serrelab --help` for the commands.", style="dim")
    console.print(Panel(title, border_style="blue"))
