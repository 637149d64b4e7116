"""CLI commands. Each returns a status dictionary; main.py turns it into an exit code."""

import logging
from fractions import Fraction
from typing import Any, Dict, List

from common.enums import CheckStatus
from services.bases.pbw import BasisIdentityError, pbw_basis
from services.cli.formatters import render_basis, render_report, render_transition
from services.cli.schemas import (
    BasisRecord,
    BracketRecord,
    CheckRecord,
    JobConfig,
    SuiteReport,
    TransitionRecord,
    WordTerm,
)
from services.cli.suites import run_suite
from services.fock.weight_space import DegreeBoundError, norm_squared
from services.linalg.rational import format_rational
from services.mz.gz import TransitionError, bracket_expansion, omega_expansion, transition_matrix

logger = logging.getLogger(__name__)


def cmd_enumerate(config: JobConfig) -> Dict[str, Any]:
    """List the PBW-type basis of degree config.degree: tableau, gamma, coefficient, norm and word vector."""
    ctx = config.context
    try:
        elements = pbw_basis(ctx, config.degree)
        records = []
        for element in elements:
            shape = element.tableau.shape
            records.append(
                BasisRecord(
                    degree=config.degree,
                    shape=list(shape.parts),
                    tableau=[list(row) for row in element.tableau.rows],
                    gamma=element.gamma.to_list(),
                    weight=list(element.tableau.content(ctx.n)),
                    coeff=format_rational(Fraction(shape.factorial(), element.gamma.diag_factorial())),
                    norm2=format_rational(norm_squared(ctx, element.vector)),
                    vector=[WordTerm(**term) for term in element.vector.to_json()],
                )
            )
        logger.info(f"Enumerated {len(records)} basis vectors of degree {config.degree} in {ctx}")
        return {"status": "success", "count": len(records), "output": render_basis(records, config.format)}
    except BasisIdentityError as e:
        logger.warning(f"Basis identity failed: {e}")
        return {"status": "failed", "message": str(e)}
    except DegreeBoundError as e:
        return {"status": "error", "message": str(e)}
    except Exception as e:
        logger.error(f"Error enumerating basis for {ctx}: {str(e)}", exc_info=True)
        return {"status": "error", "message": str(e)}


def cmd_verify(config: JobConfig) -> Dict[str, Any]:
    """Run a verification suite; failed when any identity fails."""
    try:
        result = run_suite(config)
    except DegreeBoundError as e:
        return {"status": "error", "message": str(e)}
    except Exception as e:
        logger.error(f"Error running suite {config.suite.value}: {str(e)}", exc_info=True)
        return {"status": "error", "message": str(e)}

    report = SuiteReport(
        suite=config.suite,
        n=config.n,
        p=config.p,
        degree=config.degree,
        seed=config.seed,
        passed=result.passed,
        checks=[CheckRecord(name=c.name, anchor=c.anchor, status=c.status, detail=c.detail) for c in result.checks],
    )
    skipped = sum(1 for c in result.checks if c.status is CheckStatus.SKIPPED)
    summary = {
        "checks": len(result.checks),
        "failed": len(result.failures),
        "skipped": skipped,
        "seed": config.seed,
        "output": render_report(report, config.format),
    }
    if not result.passed:
        for failure in result.failures:
            logger.warning(f"FAILED {failure.name}: {failure.anchor} {failure.detail}")
        return {"status": "failed", **summary}
    return {"status": "success", **summary}


def cmd_transition(config: JobConfig) -> Dict[str, Any]:
    """Dump T and T^{-1} per weight for lambda, with each v_A in bracket form."""
    ctx = config.context
    shape = config.partition
    if shape.length > min(ctx.n, ctx.p):
        message = f"Omega_{shape} vanishes in {ctx} (l(lambda) > p); no transition matrix"
        logger.info(message)
        return {"status": "success", "message": message, "output": ""}
    try:
        blocks = transition_matrix(ctx, shape)
    except TransitionError as e:
        logger.warning(f"Transition matrix failed: {e}")
        return {"status": "failed", "message": str(e)}
    except Exception as e:
        logger.error(f"Error computing transition matrix for {shape}: {str(e)}", exc_info=True)
        return {"status": "error", "message": str(e)}

    records: List[TransitionRecord] = []
    for block in blocks:
        brackets = []
        for tableau in block.tableaux:
            terms = bracket_expansion(omega_expansion(shape, block.row(tableau), ctx.n))
            brackets.append(
                BracketRecord(
                    tableau=[list(row) for row in tableau.rows],
                    terms=[t.to_text() for t in terms],
                    latex=[t.to_latex() for t in terms],
                )
            )
        records.append(
            TransitionRecord(
                shape=list(shape.parts),
                weight=list(block.counts),
                tableaux=[[list(row) for row in t.rows] for t in block.tableaux],
                T=block.matrix.to_json(),
                T_inverse=block.inverse.to_json(),
                triangular=block.is_triangular,
                brackets=brackets,
            )
        )
    output = render_transition(records, config.format)
    if ctx.n <= 3 and not all(r.triangular for r in records):
        bad = [r.weight for r in records if not r.triangular]
        return {"status": "failed", "message": f"Transition blocks not triangular at weights {bad}", "output": output}
    return {"status": "success", "blocks": len(records), "output": output}
