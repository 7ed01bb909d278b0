import json
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ValidationError

from tropical.exceptions import EXIT_INPUT_ERROR, EXIT_PRECONDITION, TropicalError
from tropical.reports import compute

logger = logging.getLogger("tropical.commands")

DOCUMENT_FLAGS = ("plane", "frame", "curve", "a", "b", "morphism", "triangulation")

SUBCOMMANDS = {
    "intersect": ("Intersection number of two fan curves in a plane.", ("plane", "frame", "a", "b")),
    "self-intersect": ("Self-intersection C² of a fan curve.", ("plane", "frame", "curve")),
    "degree": ("Degree of a fan curve with respect to the plane's frame.", ("plane", "frame", "curve")),
    "adjunction": ("Adjunction bound B of a fan curve.", ("plane", "frame", "curve")),
    "hessian": ("Hessian bound H of a fan morphism.", ("plane", "frame", "morphism", "curve")),
    "rh": ("Riemann-Hurwitz genus bound.", ("plane", "frame", "morphism")),
    "classify": ("Classify a 2- or 3-valent fan curve.", ("plane", "frame", "curve")),
    "surface-scan": ("Scan a triangulation of Δ_d for pathological cells and line verdicts.",
                     ("triangulation",)),
    "surface-subdivide": ("Regular subdivision of Δ_d induced by lifts.", ("triangulation",)),
}


def _read_document(path):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise CommandError(f"Cannot read {path}: {exc.strerror}", returncode=EXIT_INPUT_ERROR)
    except json.JSONDecodeError as exc:
        raise CommandError(f"{path} is not valid JSON: {exc}", returncode=EXIT_INPUT_ERROR)


def _flatten(detail, prefix=""):
    if isinstance(detail, dict):
        for key, value in detail.items():
            yield from _flatten(value, f"{prefix}{key}.")
    elif isinstance(detail, list):
        for item in detail:
            yield from _flatten(item, prefix)
    else:
        yield f"{prefix.rstrip('.') or 'document'}: {detail}"


class Command(BaseCommand):
    help = "Fan tropical curve computations: intersections, obstructions, classification, surfaces."

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest="job", required=True)
        for name, (description, documents) in SUBCOMMANDS.items():
            sub = subparsers.add_parser(name, help=description, description=description)
            for flag in documents:
                sub.add_argument(f"--{flag}", metavar="FILE", help=f"JSON {flag} document")
            if name == "rh":
                sub.add_argument("--d", type=int, required=True)
                sub.add_argument("--k", type=int)
                sub.add_argument("--l", type=int)
                sub.add_argument("--genus", type=int, default=0)
            sub.add_argument("--format", choices=("human", "machine"), default="human")

    def handle(self, *args, **options):
        job = options["job"]
        documents = {
            flag: _read_document(options[flag])
            for flag in DOCUMENT_FLAGS if options.get(flag)
        }
        if job == "rh":
            documents.update(
                {key: options[key] for key in ("d", "k", "l", "genus") if options.get(key) is not None}
            )
        logger.info("fan %s with %s", job, ", ".join(sorted(documents)) or "no documents")
        try:
            report = compute(job, documents)
        except ValidationError as exc:
            raise CommandError("; ".join(_flatten(exc.detail)), returncode=EXIT_INPUT_ERROR)
        except TropicalError as exc:
            if exc.exit_code not in (EXIT_INPUT_ERROR, EXIT_PRECONDITION):
                logger.error("fan %s failed: %s", job, exc.detail)
            raise CommandError(f"{type(exc).__name__}: {exc.detail}", returncode=exc.exit_code)
        indent = getattr(settings, "TROPICAL", {}).get("MACHINE_INDENT")
        self.stdout.write(report.render(options["format"], indent))
