"""Output formatting utilities for the CLI."""

from rich.console import Console
from rich.table import Table
from rich.text import Text

from src.graph.instance import Solution
from src.solver.verify import VerifyReport
from src.structure.compatibility import StructureReport

# Results go to stdout, diagnostics and logs to stderr
console = Console()
error_console = Console(stderr=True)


def format_error(error: str) -> Text:
    """Format an error message.

    Args:
        error: The error message

    Returns:
        Formatted error text with styling
    """
    text = Text()
    text.append("Error: ", style="bold red")
    text.append(error, style="red")
    return text


def format_solution(solution: Solution, title: str = "Solution") -> Text:
    """Format a solution as its cost followed by one line per walk.

    Args:
        solution: The solution to display
        title: Heading shown before the cost

    Returns:
        Formatted solution text
    """
    text = Text()
    text.append(f"{title}\n", style="bold cyan")
    text.append("  Cost: ", style="bold")
    text.append(f"{solution.cost}\n")
    for side, walks in (("forward", solution.forward), ("backward", solution.backward)):
        for index, walk in enumerate(walks):
            text.append(f"  {side}[{index}]: ", style="bold green")
            text.append(" ".join(map(str, walk.vertices)) + "\n")
    return text


def format_optima(optima: list[Solution]) -> Text:
    """Summarize an enumeration of optimal solutions."""
    text = Text()
    if not optima:
        text.append("No optimal solutions found\n", style="yellow")
        return text
    text.append(f"{len(optima)} optimal solutions of cost {optima[0].cost}\n", style="bold cyan")
    for index, solution in enumerate(optima):
        text.append_text(format_solution(solution, title=f"Optimum {index}"))
    return text


def format_verify_report(report: VerifyReport) -> Text:
    """Format a verification verdict.

    Args:
        report: The report produced by `verify`

    Returns:
        Green OK line or a red list of violations
    """
    text = Text()
    if report.ok:
        text.append("OK", style="bold green")
        text.append(f" cost {report.reported_cost}\n")
        return text
    text.append("FAILED\n", style="bold red")
    for violation in report.violations:
        text.append(f"  - {violation}\n", style="red")
    return text


def format_structure_report(report: StructureReport) -> Table:
    """Tabulate shared-subpath counts and compatibility per forward/backward pair."""
    table = Table(title="Reverse-compatibility")
    table.add_column("forward", justify="right")
    table.add_column("backward", justify="right")
    table.add_column("d", justify="right")
    table.add_column("backward order")
    table.add_column("compatible")
    for pair in report.pairs:
        table.add_row(
            str(pair.forward),
            str(pair.backward),
            str(pair.d),
            " ".join(map(str, pair.backward_order)),
            Text("yes", style="green") if pair.compatible else Text("no", style="red"),
        )
    verdict = "yes" if report.general_reverse_compatible else "no"
    ranks = ", ".join(map(str, report.ranks))
    table.caption = f"ranks: {ranks}; general reverse-compatible: {verdict}"
    return table


def format_batch(rows: list[tuple[str, str, str]]) -> Table:
    """Tabulate (file, status, cost) rows of a batch run."""
    table = Table(title="Batch results")
    table.add_column("file")
    table.add_column("status")
    table.add_column("cost", justify="right")
    for path, status, cost in rows:
        style = "green" if status == "solved" else "red"
        table.add_row(path, Text(status, style=style), cost)
    return table


def print_formatted(text: str | Text | Table) -> None:
    """Print formatted output to stdout.

    Args:
        text: String or Rich renderable to print
    """
    if isinstance(text, str):
        print(text)
    else:
        console.print(text)
