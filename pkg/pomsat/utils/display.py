from typing import Text

from rich.panel import Panel
from rich.table import Table
from rich.text import Text as RichText

from pomsat.config import console
from pomsat.types.planner import SolveReport

VERDICT_STYLES = {
    "WINNING": "bold green",
    "NO-STRATEGY": "bold red",
    "UNKNOWN": "bold yellow",
    "INCONCLUSIVE": "bold yellow",
}


def attempts_table(report: SolveReport, title: Text = "Solver attempts") -> Table:
    table = Table(title=title)
    table.add_column("mu", justify="right", style="cyan")
    table.add_column("k", justify="right", style="cyan")
    table.add_column("encoding", style="magenta")
    table.add_column("status")
    table.add_column("vars", justify="right")
    table.add_column("clauses", justify="right")
    table.add_column("conflicts", justify="right")
    table.add_column("encode ms", justify="right")
    table.add_column("solve ms", justify="right")
    for attempt in report.attempts:
        table.add_row(
            str(attempt.mu),
            str(attempt.k),
            attempt.encoding,
            attempt.status.value,
            str(attempt.vars),
            str(attempt.clauses),
            str(attempt.solver_stats.conflicts),
            f"{attempt.encode_ms:.1f}",
            f"{attempt.solve_ms:.1f}",
        )
    return table


def display_report(report: SolveReport, *, print_panel: bool = True) -> RichText:
    """
    Display a solve report as an attempts table followed by a verdict panel.

    Parameters
    ----------
    report : SolveReport
        The report returned by the planner.
    print_panel : bool, optional
        If True, prints the table and panel to the console (default is True).

    Returns
    -------
    RichText
        The verdict line.
    """

    content = RichText(report.label, style=VERDICT_STYLES[report.verdict])
    content += RichText(
        f"\n{report.vars} vars, {report.clauses} clauses, "
        + f"{report.time_ms:.1f} ms total"
    )
    if print_panel:
        console.print(attempts_table(report))
        console.print(Panel(content, title="Verdict"))
    return content
