"""控制台摘要（rich 表格）"""

from rich.console import Console
from rich.table import Table

from src.cli.report import PresentationModel, Report, ReportBatch
from src.cli.runner import CorpusSummary

# 命令 → 奇点表中显示的列
_POINT_COLUMNS: dict[str, tuple[str, ...]] = {
    "milnor": ("milnor",),
    "tjurina": ("tjurina",),
    "eulerian": ("milnor", "tjurina", "locally_eulerian"),
    "classify": ("ade", "ade_name", "delta", "branches"),
    "genus": ("ade", "delta"),
}
_ANALYZE_COLUMNS = (
    "multiplicity",
    "milnor",
    "tjurina",
    "locally_eulerian",
    "local_complete_intersection",
    "socle_cyclic",
    "ade",
)


def _fmt(value: object) -> str:
    if value is None:
        return "-"
    if value is True:
        return "[green]yes[/green]"
    if value is False:
        return "[red]no[/red]"
    return str(value)


def _point_columns(commands: list[str]) -> list[str]:
    if "analyze" in commands:
        return list(_ANALYZE_COLUMNS)
    columns: dict[str, None] = {}
    for command in commands:
        for column in _POINT_COLUMNS.get(command, ()):
            columns.setdefault(column, None)
    return list(columns)


def _points_table(report: Report) -> Table | None:
    if not report.singular_points:
        return None
    columns = _point_columns(report.commands)
    table = Table(title=f"{report.name}: singular points", show_lines=False)
    table.add_column("point")
    table.add_column("chart")
    for column in columns:
        table.add_column(column.replace("_", " "), justify="right")
    for p in report.singular_points:
        coords = ":".join(p.point) if p.projective else ", ".join(p.point)
        label = f"[{coords}]" if p.projective else f"({coords})"
        values = p.model_dump()
        table.add_row(label, _fmt(p.chart), *(_fmt(values[c]) for c in columns))
    return table


def _presentation_table(title: str, presentation: PresentationModel) -> Table:
    table = Table(title=title)
    table.add_column("T-degree", justify="right")
    table.add_column("generator")
    for degree, g in zip(presentation.t_degrees, presentation.generators, strict=True):
        table.add_row(str(degree), g)
    return table


def render_report(report: Report, console: Console) -> None:
    console.rule(f"[bold]{report.name}[/bold] ({report.setting})")
    console.print(f"input: {report.input}")
    if report.error:
        console.print(
            f"[red]error[/red] {report.error.kind}: {report.error.message} "
            f"(exit {report.error.exit_code})"
        )
        return
    for warning in report.warnings:
        console.print(f"[yellow]warning[/yellow] {warning}")

    if report.locus is not None and report.locus.dimension > 0:
        console.print(f"singular locus dimension: {report.locus.dimension}")
    points = _points_table(report)
    if points is not None:
        console.print(points)
    elif report.singular_points == []:
        console.print("no singular points")

    if report.syzygies is not None:
        console.print(f"syzygies: {len(report.syzygies.columns)} columns")
        for column in report.syzygies.columns:
            console.print("  (" + ", ".join(column) + ")")
    if report.symmetric is not None:
        console.print(_presentation_table(f"{report.name}: symmetric ideal", report.symmetric))
    if report.rees is not None:
        console.print(_presentation_table(f"{report.name}: Rees ideal", report.rees))
    if report.genus is not None:
        console.print(f"geometric genus: {report.genus}")

    verdict = report.linear_type
    if verdict is not None:
        kind = "gradient" if report.setting == "projective" else "Jacobian"
        console.print(
            f"{kind} linear type: {_fmt(verdict.verdict)}"
            f"  methods: {', '.join(verdict.methods) or '-'}"
        )
        if verdict.witness:
            console.print(f"  witness: {verdict.witness}")
        for caveat in verdict.caveats:
            console.print(f"  [yellow]caveat[/yellow] {caveat}")


def render_batch(batch: ReportBatch, console: Console) -> None:
    if batch.error:
        console.print(f"[red]error[/red] {batch.error.kind}: {batch.error.message}")
        return
    for report in batch.reports:
        render_report(report, console)


def render_corpus(summary: CorpusSummary, console: Console) -> None:
    table = Table(title=f"corpus {summary.directory}")
    table.add_column("file")
    table.add_column("name")
    table.add_column("linear type", justify="center")
    table.add_column("exit", justify="right")
    for e in summary.entries:
        verdict = _fmt(e.verdict) if not e.exit_code else f"[red]{e.message}[/red]"
        table.add_row(e.file, e.name, verdict, str(e.exit_code))
    console.print(table)
    counts = summary.counts
    console.print(
        f"true {counts['true']}  false {counts['false']}  "
        f"undecided {counts['undecided']}  failed {counts['failed']}"
    )
