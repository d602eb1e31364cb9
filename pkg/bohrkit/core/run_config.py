"""
BOHRKIT Run Configuration

One validated description of a CLI run: command, mathematical parameters,
sweep settings and output format. Flags override the stored Config.
"""

from argparse import Namespace
from dataclasses import dataclass, replace
from typing import Optional, Tuple

from .config import Config
from .errors import ValidationError
from .reports import FORMATS
from ..utils.validators import validate_choice, validate_open_disk, validate_positive_int, validate_real


COMMANDS = ('xi', 'rstar', 'radius', 'convexity', 'chains', 'lq-witness', 'verify')
VERIFY_TARGETS = (
    'bohr', 'refined', 'rogosinski-a', 'rogosinski-b', 'rogosinski-classical',
    'subordination', 'wiener', 'majorant', 'parseval', 'abel', 'milne', 'schwarz',
)
FAMILY_NAMES = ('mobius', 'blaschke', 'poly_random', 'subordination', 'constant')
PSI_CHOICES = ('z', 'z2', 'random')
CONVENTIONS = ('power_phase', 'common_phase')
SPACES = ('complex', 'lq')

# Families whose members come from closed forms rather than random draws.
CLOSED_FAMILIES = ('mobius', 'constant')


@dataclass(frozen=True)
class RunConfig:
    """Validated parameters of one bohrkit run."""
    command: str
    target: Optional[str] = None
    p_grid: Tuple[float, ...] = (1.0,)
    N_grid: Tuple[int, ...] = (1,)
    q: Optional[float] = None
    D: int = 64
    d: Optional[int] = None
    operator_dim: int = 2
    family: Optional[str] = None
    samples: int = 200
    seed: int = 0
    r_grid: int = 16
    t_grid: int = 256
    tol: float = 1e-12
    slack: Optional[float] = None
    slack_closed: float = 1e-9
    slack_random: float = 1e-7
    output: str = 'csv'
    phase_convention: str = 'power_phase'
    space: str = 'complex'
    workers: int = 1
    alpha: complex = 0.5
    psi: Optional[str] = None
    r: Optional[float] = None
    a_grid: Tuple[float, ...] = (0.9, 0.99, 0.999)
    poly_degree: int = 6
    boundary_grid: int = 2048
    theta_grid: int = 512
    grid_points: int = 4096
    uncoupled: bool = False

    @property
    def p(self) -> float:
        return self.p_grid[0]

    @property
    def N(self) -> int:
        return self.N_grid[0]

    @property
    def lq_exponent(self) -> float:
        """Exponent of ℓ_q: --q when given, else 2 or twice the largest p, whichever is larger."""
        if self.q is not None:
            return self.q
        return max(2.0, 2.0 * max(self.p_grid))

    @property
    def report_name(self) -> str:
        """Base of the report file name: the command, plus the verify target."""
        return f"{self.command}-{self.target}" if self.target else self.command

    def dim_for(self, scalar: bool) -> int:
        """Matrix dimension: --d when given, else 1 for scalar checks and sweep.dim otherwise."""
        if self.d is not None:
            return self.d
        return 1 if scalar else self.operator_dim

    def effective_slack(self, family: Optional[str] = None) -> float:
        """Explicit slack, else the closed-form or randomized default for the family."""
        if self.slack is not None:
            return self.slack
        name = family if family is not None else self.family
        return self.slack_closed if name is None or name in CLOSED_FAMILIES else self.slack_random

    def validate(self) -> 'RunConfig':
        """Check every field against the operations it feeds; raises ValidationError."""
        validate_choice(self.command, COMMANDS, "command")
        if self.command == 'verify':
            if self.target is None:
                raise ValidationError("verify needs a target", field="target")
            validate_choice(self.target, VERIFY_TARGETS, "target")
        if not self.p_grid:
            raise ValidationError("At least one p is required", field="p")
        for p in self.p_grid:
            validate_real(p, "p", 1.0)
        if not self.N_grid:
            raise ValidationError("At least one N is required", field="N")
        for N in self.N_grid:
            validate_positive_int(N, "N")
        if self.q is not None:
            validate_real(self.q, "q", 1.0)
        validate_positive_int(self.D, "D", minimum=0)
        if self.d is not None:
            validate_positive_int(self.d, "d")
        validate_positive_int(self.operator_dim, "operator_dim")
        if self.family is not None:
            validate_choice(self.family, FAMILY_NAMES, "family")
        validate_positive_int(self.samples, "samples")
        validate_positive_int(self.seed, "seed", minimum=0)
        validate_positive_int(self.workers, "workers")
        validate_positive_int(self.r_grid, "r_grid")
        validate_positive_int(self.t_grid, "t_grid")
        validate_real(self.tol, "tol", 0.0, low_open=True)
        if self.slack is not None:
            validate_real(self.slack, "slack", 0.0)
        validate_choice(self.output, FORMATS, "format")
        validate_choice(self.phase_convention, CONVENTIONS, "phase_convention")
        validate_choice(self.space, SPACES, "space")
        validate_open_disk(self.alpha, "alpha")
        if self.psi is not None:
            validate_choice(self.psi, PSI_CHOICES, "psi")
        if self.r is not None:
            validate_real(self.r, "r", 0.0, 1.0, high_open=True)
        for a in self.a_grid:
            validate_real(a, "a", 0.0, 1.0, low_open=True, high_open=True)
        validate_positive_int(self.poly_degree, "poly_degree", minimum=0)
        validate_positive_int(self.boundary_grid, "boundary_grid", minimum=8)
        validate_positive_int(self.theta_grid, "theta_grid", minimum=8)
        validate_positive_int(self.grid_points, "grid_points", minimum=3)
        return self

    @classmethod
    def from_namespace(cls, args: Namespace, config: Config) -> 'RunConfig':
        """
        Build from parsed CLI arguments, filling unset flags from config.

        Args:
            args: argparse namespace (missing attributes count as unset)
            config: Loaded configuration
        """
        def arg(name, default=None):
            value = getattr(args, name, None)
            return default if value is None else value

        def grid(name, default):
            value = getattr(args, name, None)
            if value is None:
                return default
            return tuple(value) if isinstance(value, (list, tuple)) else (value,)

        run = cls(
            command=args.command,
            target=getattr(args, 'target', None),
            p_grid=grid('p', (1.0,)),
            N_grid=grid('N', (1,)),
            q=arg('q'),
            D=arg('D', config.series.degree),
            d=arg('d'),
            operator_dim=config.sweep.dim,
            family=arg('family'),
            samples=arg('samples', config.sweep.samples),
            seed=arg('seed', config.sweep.seed),
            r_grid=arg('r_grid', config.verify.r_grid),
            t_grid=arg('t_grid', config.verify.t_grid),
            tol=arg('tol', config.numerics.tol),
            slack=arg('slack'),
            slack_closed=config.verify.slack_closed,
            slack_random=config.verify.slack_random,
            output=arg('format', 'csv'),
            phase_convention=arg('phase_convention', 'power_phase'),
            space=arg('space', 'complex'),
            workers=arg('workers', config.sweep.workers),
            alpha=_parse_complex(arg('alpha', 0.5)),
            psi=arg('psi'),
            r=arg('r'),
            a_grid=grid('a', (0.9, 0.99, 0.999)),
            poly_degree=arg('poly_degree', 6),
            boundary_grid=config.series.boundary_grid,
            theta_grid=arg('theta_grid', config.numerics.theta_grid),
            grid_points=config.numerics.grid_points,
            uncoupled=bool(arg('uncoupled', False)),
        )
        return run.validate()

    def with_overrides(self, **changes) -> 'RunConfig':
        return replace(self, **changes).validate()


def _parse_complex(value) -> complex:
    if isinstance(value, complex):
        return value
    try:
        return complex(str(value).replace(' ', '').replace('i', 'j'))
    except ValueError:
        raise ValidationError(f"alpha must be a complex number like 0.5 or 0.3+0.4j, got {value!r}", field="alpha")
