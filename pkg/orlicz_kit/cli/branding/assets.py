LOGO_SMALL = """[bold cyan]
  Φ  [white]Orlicz Kit[/white] [dim]v{version}[/dim]
  [dim]‖f‖ = inf {{λ > 0 : sup Φ(t) μ(f/λ, t) ≤ 1}}[/dim]
[/bold cyan]"""

LOGO_MINI = "[bold cyan]Φ orlicz-kit[/bold cyan] [dim]v{version}[/dim]"

BANNER_STYLE_MAP = {
    "small": LOGO_SMALL,
    "mini": LOGO_MINI,
}

STATUS_ICON_MAP = {
    "info": "[blue]ℹ[/blue]",
    "success": "[green]✓[/green]",
    "warning": "[yellow]⚠[/yellow]",
    "error": "[red]✗[/red]",
    "loading": "[cyan]⟳[/cyan]",
}
