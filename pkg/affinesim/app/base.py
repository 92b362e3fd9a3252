from argparse import ArgumentParser, HelpFormatter
from contextlib import contextmanager
from logging import getLogger, Formatter, StreamHandler
from os import environ
from pathlib import Path
from pydantic import ValidationError
from re import compile
from sys import argv as sys_argv
from time import perf_counter
from typing import Dict, List, Optional

from affinesim.canonical import UnitaryVerdict, check_unitary
from affinesim.circuit import Circuit, amplitude, circuit_signature, marginal_probability, sample_outcome
from affinesim.converter import circuit_to_text, signature_to_text, tableau_to_text
from affinesim.engine import AffSimEngine
from affinesim.error import (
    AffSimContractError,
    AffSimDenseLimitError,
    AffSimInvariantViolation,
    AffSimParseError,
    AffSimSingularError,
    AffSimTheoremViolation,
)
from affinesim.f2core import BitVec
from affinesim.oracle import random_affine_signature, random_clifford_circuit
from affinesim.parser import parse_circuit_file, parse_settings_file, parse_signature_file
from affinesim.pauli import clifford_tableau_of
from affinesim.settings import AffSimSettings
from affinesim.signature import AffineSignature
from affinesim.validator import default_validate_sequence
from affinesim.version import __version__


EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_USAGE = 2

_MEASURE_RE = compile(r"^q?(\d+)=([01])$")


class BaseApp:
    application_name = "AffineSim"
    application_version = __version__

    validate_sequence = default_validate_sequence

    def __init__(self, argv: Optional[List[str]] = None):
        self.elapsed_timers: Dict[str, float] = {}

        self.arg_parser = self.init_arguments_parser()
        self.args = self.init_arguments(argv)
        self.logger = self.init_logger()

        with self.measure_elapsed_time("InitSettings"):
            self.settings = self.init_settings()

    def init_arguments_parser(self):
        formatter = lambda prog: HelpFormatter(prog, max_help_position=36)

        parser = ArgumentParser(
            prog="affinesim", description="Exact stabilizer circuit simulator based on affine signatures", formatter_class=formatter
        )

        # Settings
        parser.add_argument(
            "--settings",
            help="Path to YAML settings file (default: AFFINESIM_SETTINGS env variable)",
            metavar="SETTINGS_PATH",
            default=environ.get("AFFINESIM_SETTINGS"),
        )
        parser.add_argument(
            "--dense-limit",
            help="Maximum number of qubits for dense matrix export (default: AFFINESIM_DENSE_LIMIT env variable or 10)",
            type=int,
            default=environ.get("AFFINESIM_DENSE_LIMIT"),
        )

        # Logging
        parser.add_argument(
            "--log-level", help="Log level (possible values: DEBUG, INFO, WARNING; default: INFO)", default=None
        )
        # fmt: off
        parser.add_argument(
            "--show-timers", help="Show debug timers", default=False, action="store_true"
        )
        # fmt: on

        # Subparsers
        subparsers = parser.add_subparsers(dest="action")
        subparsers.required = True

        simulate = subparsers.add_parser("simulate", help="Sample a full measurement outcome")
        simulate.add_argument("-c", help="Path to circuit file", metavar="CIRCUIT", required=True)
        simulate.add_argument("--in", dest="input_bits", help="Input basis state, qubit 0 first", metavar="BITS", required=True)
        simulate.add_argument("--seed", help="Random seed", type=int, default=0)

        amp = subparsers.add_parser("amplitude", help="Exact amplitude <out| U |in>")
        amp.add_argument("-c", help="Path to circuit file", metavar="CIRCUIT", required=True)
        amp.add_argument("--in", dest="input_bits", help="Input basis state, qubit 0 first", metavar="BITS", required=True)
        amp.add_argument("--out", dest="output_bits", help="Output basis state, qubit 0 first", metavar="BITS", required=True)

        prob = subparsers.add_parser("prob", help="Exact marginal measurement probability")
        prob.add_argument("-c", help="Path to circuit file", metavar="CIRCUIT", required=True)
        prob.add_argument("--in", dest="input_bits", help="Input basis state, qubit 0 first", metavar="BITS", required=True)
        prob.add_argument("--measure", help="Measured outcome, e.g. q0=0,q1=1", metavar="OUTCOME", default="")

        check = subparsers.add_parser("check", help="Unitarity verdict for a signature file")
        check.add_argument("-s", help="Path to signature file", metavar="SIGNATURE", required=True)
        check.add_argument("--expect", help="Expected verdict", choices=["unitary", "singular"], default=None)

        tableau = subparsers.add_parser("tableau", help="Clifford tableau of a circuit or signature")
        source = tableau.add_mutually_exclusive_group(required=True)
        source.add_argument("-c", help="Path to circuit file", metavar="CIRCUIT")
        source.add_argument("-s", help="Path to signature file", metavar="SIGNATURE")

        random = subparsers.add_parser("random", help="Print a random circuit or signature")
        random_kinds = random.add_subparsers(dest="random_kind")
        random_kinds.required = True

        random_circuit = random_kinds.add_parser("circuit", help="Random H/P/CNOT circuit")
        random_circuit.add_argument("--qubits", type=int, required=True)
        random_circuit.add_argument("--length", type=int, required=True)
        random_circuit.add_argument("--seed", type=int, default=0)

        random_signature = random_kinds.add_parser("signature", help="Random affine signature")
        random_signature.add_argument("--arity", type=int, required=True)
        random_signature.add_argument("--seed", type=int, default=0)

        selftest = subparsers.add_parser("selftest", help="Run randomized invariant suites against the dense oracle")
        selftest.add_argument("--trials", help="Trials per suite", type=int, default=None)

        bench = subparsers.add_parser("bench", help="Time amplitude and probability queries on large random circuits")
        bench.add_argument("--qubits", help="Comma-separated qubit counts", default=None)
        bench.add_argument("--gates", help="Comma-separated gate counts", default=None)

        return parser

    def init_arguments(self, argv: Optional[List[str]]):
        return vars(self.arg_parser.parse_args(argv))

    def init_logger(self):
        logger = getLogger("affinesim")
        logger.setLevel((self.args.get("log_level") or "INFO").upper())

        formatter = Formatter("%(asctime)s - %(levelname)s - %(message)s")
        formatter.default_msec_format = "%s.%03d"

        handler = StreamHandler()
        handler.setFormatter(formatter)

        logger.handlers.clear()
        logger.addHandler(handler)

        return logger

    def init_settings(self):
        if self.args.get("settings"):
            settings = parse_settings_file(self.args["settings"])
        else:
            settings = AffSimSettings()

        if self.args.get("log_level"):
            settings.log_level = self.args["log_level"].upper()
        else:
            self.logger.setLevel(settings.log_level)

        if self.args.get("dense_limit") is not None:
            settings.dense_limit = int(self.args["dense_limit"])

        if self.args.get("action") == "selftest" and self.args.get("trials"):
            settings.selftest_trials = self.args["trials"]

        if self.args.get("action") == "bench":
            if self.args.get("qubits"):
                settings.bench_qubits = self.parse_int_list(self.args["qubits"])

            if self.args.get("gates"):
                settings.bench_gates = self.parse_int_list(self.args["gates"])

        return settings

    def get_engine(self):
        return AffSimEngine(self.settings)

    def execute(self) -> int:
        action = self.args["action"]
        handler = getattr(self, f"execute_{action}")

        with self.measure_elapsed_time(action):
            code = handler()

        if self.args.get("show_timers"):
            self.output_app_timers()

        return code

    def execute_simulate(self):
        circuit = self.load_circuit(self.args["c"])
        input_bits = self.parse_bits(self.args["input_bits"], circuit)

        outcome = sample_outcome(circuit, input_bits, self.args["seed"])
        print(outcome.to_string())

        return EXIT_OK

    def execute_amplitude(self):
        circuit = self.load_circuit(self.args["c"])
        input_bits = self.parse_bits(self.args["input_bits"], circuit)
        output_bits = self.parse_bits(self.args["output_bits"], circuit)

        with self.get_engine() as engine:
            value = amplitude(circuit, input_bits, output_bits)
            print(engine.format("{value:ring}", {"value": value}))

        return EXIT_OK

    def execute_prob(self):
        circuit = self.load_circuit(self.args["c"])
        input_bits = self.parse_bits(self.args["input_bits"], circuit)
        measured = self.parse_measure(self.args["measure"])

        with self.get_engine() as engine:
            value = marginal_probability(circuit, input_bits, measured)
            print(engine.format("{value:prob}", {"value": value}))

        return EXIT_OK

    def execute_check(self):
        f = self.load_signature(self.args["s"])
        check = check_unitary(f)

        print(str(check))

        expect = self.args.get("expect")

        if expect == "singular" and not check.is_singular:
            self.logger.error(f"Expected [singular], got [{check}]")
            return EXIT_VERDICT

        if expect == "unitary" and check.verdict not in (UnitaryVerdict.UNITARY, UnitaryVerdict.UNITARY_AFTER_SCALING):
            self.logger.error(f"Expected [unitary], got [{check}]: {check.reason}")
            return EXIT_VERDICT

        return EXIT_OK

    def execute_tableau(self):
        if self.args.get("c"):
            f = circuit_signature(self.load_circuit(self.args["c"]))
        else:
            f = self.load_signature(self.args["s"])

        print(tableau_to_text(clifford_tableau_of(f)), end="")

        return EXIT_OK

    def execute_random(self):
        if self.args["random_kind"] == "circuit":
            circuit = random_clifford_circuit(self.args["qubits"], self.args["length"], self.args["seed"])
            print(circuit_to_text(circuit), end="")
        else:
            f = random_affine_signature(self.args["arity"], self.args["seed"])
            print(signature_to_text(f), end="")

        return EXIT_OK

    def execute_selftest(self):
        total_error_count = 0
        total_trial_count = 0

        with self.get_engine() as engine:
            for validator_cls in self.validate_sequence:
                with self.measure_elapsed_time(validator_cls.__name__):
                    validator = validator_cls(engine)
                    validator.validate()

                total_error_count += len(validator.errors)
                total_trial_count += validator.trial_count

                self.logger.info(f"Validator [{validator_cls.__name__}] finished [{validator.trial_count}] trials with [{len(validator.errors)}] error(s)")

        if total_error_count:
            self.logger.error(f"Execution halted due to [{total_error_count}] error(s) in self-test validators")
            return EXIT_VERDICT

        print(f"selftest ok: {total_trial_count} trials in {len(self.validate_sequence)} suites")

        return EXIT_OK

    def execute_bench(self):
        for n in self.settings.bench_qubits:
            for gates in self.settings.bench_gates:
                circuit = random_clifford_circuit(n, gates, [self.settings.bench_seed, n, gates])
                zeros = BitVec.zeros(n)

                start_counter = perf_counter()
                amplitude(circuit, zeros, zeros)
                amplitude_ms = (perf_counter() - start_counter) * 1000

                start_counter = perf_counter()
                marginal_probability(circuit, zeros, {0: 0})
                prob_ms = (perf_counter() - start_counter) * 1000

                self.logger.info(f"Marginal probability on [{n}] qubits with [{gates}] gates took {prob_ms:.1f}ms")
                print(f"bench n={n} gates={gates} ms={amplitude_ms:.1f}")

        return EXIT_OK

    def resolve_path(self, value: str) -> Path:
        path = Path(value)

        if not path.exists():
            path = Path(__file__).parent.parent / "_config" / value

        if not path.is_file():
            raise AffSimParseError("File does not exist", path=value)

        return path.resolve()

    def load_circuit(self, value: str) -> Circuit:
        return parse_circuit_file(self.resolve_path(value))

    def load_signature(self, value: str) -> AffineSignature:
        return parse_signature_file(self.resolve_path(value))

    def parse_bits(self, value: str, circuit: Circuit) -> BitVec:
        bits = BitVec.from_string(value)

        if bits.len != circuit.n_qubits:
            raise AffSimContractError(f"Bit string [{value}] has length [{bits.len}], expected [{circuit.n_qubits}]")

        return bits

    def parse_measure(self, value: str) -> Dict[int, int]:
        measured = {}

        for item in filter(None, (part.strip() for part in value.split(","))):
            m = _MEASURE_RE.match(item)

            if not m:
                raise AffSimContractError(f"Invalid measurement [{item}], expected q<index>=<bit>")

            q = int(m.group(1))

            if q in measured:
                raise AffSimContractError(f"Qubit [{q}] is measured twice")

            measured[q] = int(m.group(2))

        return measured

    def parse_int_list(self, value: str) -> List[int]:
        try:
            return [int(part) for part in value.split(",") if part.strip()]
        except ValueError:
            raise AffSimContractError(f"Invalid comma-separated integer list [{value}]") from None

    def output_app_timers(self):
        for timer_name, timer_value in self.elapsed_timers.items():
            self.logger.info(f"Timer [{timer_name}] elapsed time is {timer_value:.3f}s")

    @contextmanager
    def measure_elapsed_time(self, timer_name: str):
        start_counter = perf_counter()

        try:
            yield
        finally:
            self.elapsed_timers[timer_name] = perf_counter() - start_counter


def run(argv: Optional[List[str]] = None) -> int:
    logger = getLogger("affinesim")

    try:
        app = BaseApp(argv)
        return app.execute()
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except AffSimParseError as e:
        logger.error(f"Parse error: {e.short_message()}\n{e.verbose_message()}")
        return EXIT_USAGE
    except AffSimDenseLimitError as e:
        logger.error(str(e))
        return EXIT_USAGE
    except (AffSimContractError, ValidationError) as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_USAGE
    except AffSimSingularError as e:
        logger.error(str(e))
        return EXIT_VERDICT
    except (AffSimTheoremViolation, AffSimInvariantViolation) as e:
        logger.error(f"Internal check failed: {e}")
        return EXIT_VERDICT
    except ValueError as e:
        logger.error(str(e))
        return EXIT_USAGE


def entry_point():
    exit(run(sys_argv[1:]))
