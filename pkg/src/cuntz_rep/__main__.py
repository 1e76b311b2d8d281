# -*- coding: utf-8 -*-
"""
Created on Thursday, 15th October 2026 11:04:19 am
===============================================================================
@filename:  __main__.py
@author:    cuntz-rep developers
@project:   cuntz-rep
@purpose:   main cli for decomposing and checking cuntz algebra
            representation expressions
===============================================================================
"""
import json
import logging
import math
import os
import sys
from argparse import ArgumentParser
from pathlib import Path
from typing import ClassVar, NoReturn, Optional

from cuntz_rep.endocalc import PermEndo, endo_monomials, render_monomials
from cuntz_rep.expr import (
    Expr,
    RepLiteral,
    build_model,
    check,
    evaluate,
    literals,
    parse,
    resolve_endo,
)
from cuntz_rep.oracle import DepthError, decompose_bfs, write_dot
from cuntz_rep.repcalc import Chain, Decomposition, irreducible, render
from cuntz_rep.sweep import run_sweep

logging.basicConfig(level=logging.INFO)

logger = logging.getLogger(__name__)


def default_depth(expr: Expr) -> int:
    """
    The oracle radius an expression needs: twice the deepest endomorphism
    it mentions, or 1 when it mentions none.
    """
    depths = [
        resolve_endo(leaf.name).depth
        for leaf in literals(expr)
        if not isinstance(leaf, RepLiteral)
    ]
    return 2 * max(depths) if depths else 1


def default_reach(expr: Expr) -> int:
    """
    The chain window an expression needs: 0 without chains, otherwise
    2 * (total prefix) + 8 * lcm(periods) + 4 over all its literals.
    """
    reps = [
        leaf.rep for leaf in literals(expr) if isinstance(leaf, RepLiteral)
    ]
    chains = [rep for rep in reps if isinstance(rep, Chain)]
    if not chains:
        return 0
    periods = [
        rep.lasso.period if isinstance(rep, Chain) else len(rep.word)
        for rep in reps
    ]
    prefix = sum(len(rep.lasso.prefix) for rep in chains)
    return 2 * prefix + 8 * math.lcm(*periods) + 4


class RepCLI:
    """
    This class represents a CLI instance.
    """

    COMMANDS: ClassVar[tuple[str, ...]] = (
        "decompose",
        "equiv",
        "irreducible",
        "oracle-check",
        "monomials",
        "sweep",
    )
    DEPTH_BUDGET: ClassVar[int] = 8
    DEPTH_VAR: ClassVar[str] = "CUNTZ_REP_DEPTH"
    REACH_VAR: ClassVar[str] = "CUNTZ_REP_REACH"

    def __init__(self, args: Optional[list[str]] = None) -> None:
        parser = ArgumentParser(
            prog="cuntz-rep",
            description=(
                "Decomposes phi-tensor products and branching laws of "
                "permutative representations of Cuntz algebras"
            ),
        )

        subparsers = parser.add_subparsers(
            dest="subcommand", help="The different sub-commands available"
        )

        self.decomposeparser = subparsers.add_parser(
            name="decompose",
            help="Prints the canonical decomposition of an expression",
        )
        self._exprparser(self.decomposeparser)

        self.equivparser = subparsers.add_parser(
            name="equiv",
            help="Decides whether two expressions decompose identically",
        )
        self._equivparser(self.equivparser)

        self.irreducibleparser = subparsers.add_parser(
            name="irreducible",
            help="Decides irreducibility of every component",
        )
        self._exprparser(self.irreducibleparser)

        self.oracleparser = subparsers.add_parser(
            name="oracle-check",
            help="Recomputes a decomposition with the orbit oracle",
        )
        self._oracleparser(self.oracleparser)

        self.monomialparser = subparsers.add_parser(
            name="monomials",
            help="Prints psi(s_i) as sums of monomials s_J s_K^*",
        )
        self._exprparser(self.monomialparser, with_depth=False)

        self.sweepparser = subparsers.add_parser(
            name="sweep",
            help="Checks random cycle pairs against the orbit oracle",
        )
        self._sweepparser(self.sweepparser)

        self.parser = parser
        self.args = parser.parse_args(args)

    def main(self) -> int:
        """
        Main command distributor for the CLI

        Returns:
            int: the exit code
        """
        if self.args.subcommand == "decompose":
            return self.decompose_subcommand()
        if self.args.subcommand == "equiv":
            return self.equiv_subcommand()
        if self.args.subcommand == "irreducible":
            return self.irreducible_subcommand()
        if self.args.subcommand == "oracle-check":
            return self.oracle_subcommand()
        if self.args.subcommand == "monomials":
            return self.monomials_subcommand()
        if self.args.subcommand == "sweep":  # pragma: no branch
            return self.sweep_subcommand()
        self.parser.print_help()  # pragma: no cover
        return 2  # pragma: no cover

    def decompose_subcommand(self) -> int:
        """
        Runs the `decompose` subcommand.
        """
        expr = self._parse(self.args.expr, kind="rep")
        try:
            decomposition = self._evaluate(expr)
        except DepthError as e:
            return self._depth_failure(e)
        if self.args.json:
            print(decomposition.to_json())
        else:
            print(render(decomposition))
        return 0

    def equiv_subcommand(self) -> int:
        """
        Runs the `equiv` subcommand.
        """
        first = self._parse(self.args.first, kind="rep")
        second = self._parse(self.args.second, kind="rep")
        try:
            same = self._evaluate(first) == self._evaluate(second)
        except DepthError as e:
            return self._depth_failure(e)
        if self.args.json:
            print(json.dumps({"equivalent": same}))
        else:
            print(str(same).lower())
        return 0

    def irreducible_subcommand(self) -> int:
        """
        Runs the `irreducible` subcommand.
        """
        expr = self._parse(self.args.expr, kind="rep")
        try:
            decomposition = self._evaluate(expr)
        except DepthError as e:
            return self._depth_failure(e)
        if self.args.json:
            components = []
            for rep, _ in decomposition.components:
                item = rep.to_dict()
                item["irreducible"] = irreducible(rep)
                components.append(item)
            print(json.dumps({"components": components}))
        else:
            for rep in decomposition.classes:
                print(f"{rep}: {str(irreducible(rep)).lower()}")
        return 0

    def oracle_subcommand(self) -> int:
        """
        Runs the `oracle-check` subcommand. Exits 0 on a match, 1 on a
        mismatch against a complete oracle and 3 on a mismatch against an
        incomplete one.
        """
        expr = self._parse(self.args.expr, kind="rep")
        depth = self._depth(default_depth(expr))
        reach = self._reach(default_reach(expr))
        logger.info("Running oracle with depth %s and reach %s", depth, reach)
        try:
            formula = evaluate(expr, max(depth, self.DEPTH_BUDGET))
            model = build_model(expr, depth, reach)
        except DepthError as e:
            return self._depth_failure(e)
        except ValueError as e:
            self._fail(e)
        if self.args.dot is not None:
            write_dot(model, self.args.dot)
        result = decompose_bfs(model)
        assert isinstance(formula, Decomposition)
        match = formula == result.decomposition

        if self.args.json:
            print(
                json.dumps(
                    {
                        "match": match,
                        "complete": result.complete,
                        "depth": depth,
                        "reach": reach,
                        "formula": formula.to_dict(),
                        "oracle": result.decomposition.to_dict(),
                    }
                )
            )
        else:
            print(f"formula: {render(formula)}")
            print(f"oracle:  {render(result.decomposition)}")
            print(f"complete: {str(result.complete).lower()}")
            print("MATCH" if match else "MISMATCH")

        if match:
            return 0
        return 1 if result.complete else 3

    def monomials_subcommand(self) -> int:
        """
        Runs the `monomials` subcommand.
        """
        expr = self._parse(self.args.expr, kind="endo")
        endo = evaluate(expr)
        assert isinstance(endo, PermEndo)
        if self.args.json:
            data = endo.to_dict()
            data["monomials"] = {
                str(i): [
                    [list(left), list(right)]
                    for left, right in endo_monomials(endo, i)
                ]
                for i in range(1, endo.alphabet + 1)
            }
            print(json.dumps(data))
        else:
            for line in render_monomials(endo):
                print(line)
        return 0

    def sweep_subcommand(self) -> int:
        """
        Runs the `sweep` subcommand.
        """
        if self.args.pairs < 1:
            self.parser.error("--pairs must be at least 1")
        df = run_sweep(
            n=self.args.pairs,
            seed=self.args.seed,
            depth=self._depth(1),
            processes=self.args.processes,
        )
        if self.args.output is not None:
            outfile = Path(self.args.output).resolve()
            df.to_csv(outfile, index=False)
            logger.info("Wrote sweep table to %s", outfile)
        agree = int((df["match"] & df["complete"]).sum())
        if self.args.json:
            print(json.dumps({"pairs": len(df), "agree": agree}))
        else:
            print(f"{agree}/{len(df)} pairs agree")
        return 0 if agree == len(df) else 1

    def _exprparser(
        self, parser: ArgumentParser, with_depth: bool = True
    ) -> None:
        """
        adds the expression argument and the output flags

        Args:
            parser (ArgumentParser): the subparser to edit
            with_depth (bool, optional): whether to add --depth. Defaults
                to True.
        """
        parser.add_argument("expr", help="The expression", type=str)
        self._outputflags(parser, with_depth)

    def _equivparser(self, parser: ArgumentParser) -> None:
        """
        constructs the equiv subparser

        Args:
            parser (ArgumentParser): the subparser to edit
        """
        parser.add_argument("first", help="The first expression", type=str)
        parser.add_argument("second", help="The second expression", type=str)
        self._outputflags(parser)

    def _oracleparser(self, parser: ArgumentParser) -> None:
        """
        constructs the oracle-check subparser

        Args:
            parser (ArgumentParser): the subparser to edit
        """
        self._exprparser(parser)
        parser.add_argument(
            "--reach",
            help=(
                "How far along each chain the oracle looks. Defaults to a "
                "multiple of the periods of the chain literals"
            ),
            type=int,
            default=None,
        )
        parser.add_argument(
            "--dot",
            help="Writes the oracle graph to this path in DOT format",
            type=str,
            default=None,
            metavar="PATH",
        )

    def _sweepparser(self, parser: ArgumentParser) -> None:
        """
        constructs the sweep subparser

        Args:
            parser (ArgumentParser): the subparser to edit
        """
        parser.add_argument(
            "--pairs", help="Number of random pairs", type=int, default=200
        )
        parser.add_argument(
            "--seed", help="Seed for the sampler", type=int, default=0
        )
        parser.add_argument(
            "--processes",
            help="Pool size. Defaults to one less than the CPU count",
            type=int,
            default=None,
        )
        parser.add_argument(
            "--output",
            help="Writes the per-pair table to this .csv file",
            type=str,
            default=None,
        )
        self._outputflags(parser)

    @staticmethod
    def _outputflags(parser: ArgumentParser, with_depth: bool = True) -> None:
        parser.add_argument(
            "--json",
            help="Emits JSON instead of text",
            action="store_true",
            default=False,
        )
        if with_depth:
            parser.add_argument(
                "--depth",
                help=(
                    "Oracle radius: how long a modified word a basis label "
                    "may carry. This is not a word length and the cost grows "
                    "exponentially with it. oracle-check defaults to "
                    "$CUNTZ_REP_DEPTH, else twice the deepest endomorphism, "
                    "else 1, and sweep defaults to 1. The closed-form "
                    "commands use it as the budget for branching laws, "
                    "default 8. Chains are sized by --reach"
                ),
                type=int,
                default=None,
            )

    def _parse(self, text: str, kind: str) -> Expr:
        """
        Parses and checks an expression, exiting with a usage error when it
        is malformed or of the wrong kind.
        """
        try:
            expr = parse(text)
            found = check(expr)
        except (OSError, ValueError) as e:
            self._fail(e)
        if found.kind != kind:
            self.parser.error(f"expected a {kind} expression, got {text!r}")
        return expr

    def _evaluate(self, expr: Expr) -> Decomposition:
        try:
            value = evaluate(expr, self._depth(self.DEPTH_BUDGET))
        except DepthError:
            raise
        except ValueError as e:
            self._fail(e)
        assert isinstance(value, Decomposition)
        return value

    def _depth(self, default: int) -> int:
        if self.args.depth is not None:
            depth = self.args.depth
        else:
            depth = self._from_env(self.DEPTH_VAR, default)
        if depth < 1:
            self.parser.error(f"depth must be at least 1, got {depth}")
        return depth

    def _reach(self, default: int) -> int:
        if self.args.reach is not None:
            reach = self.args.reach
        else:
            reach = self._from_env(self.REACH_VAR, default)
        if reach < 0:
            self.parser.error(f"reach must be nonnegative, got {reach}")
        return reach

    def _from_env(self, name: str, default: int) -> int:
        value = os.environ.get(name)
        if value is None:
            return default
        try:
            return int(value)
        except ValueError:
            self.parser.error(f"${name} must be an integer, got {value!r}")

    def _fail(self, error: Exception) -> NoReturn:
        logger.error(error)
        self.parser.error(str(error))

    @staticmethod
    def _depth_failure(error: DepthError) -> int:
        logger.error(error)
        print(f"depth insufficient: {error}")
        return 3


def main() -> None:
    """
    Main driver method for the CLI.
    """
    sys.exit(RepCLI().main())  # pragma: no cover


if __name__ == "__main__":
    main()  # pragma: no cover
