"""Component coloring on proper interval graphs and split graphs.

Instances are passed in the same text formats the command-line tool reads;
``instance_text`` builds one from ``(id, left, right[, weight])`` tuples.
"""

import json

from . import _chromon
from ._chromon import (
    Error,
    GuardError,
    InfeasibleInputError,
    InvalidCertificate,
    NotProperError,
    ParseError,
    WeightTooLargeError,
    emit_ilp,
    lower_bound,
    upper_bound,
)

__all__ = [
    "Error", "GuardError", "InfeasibleInputError", "InvalidCertificate", "NotProperError", "ParseError",
    "WeightTooLargeError", "emit_ilp", "instance_text", "lower_bound", "oracle", "reduce_cnf", "schedule",
    "solve", "solve_split", "solve_weighted", "split_bound", "upper_bound", "validate_plan", "verify",
]


def instance_text(items):
    """`id left right [weight]` lines from tuples."""
    return "".join(" ".join(str(f) for f in item) + "\n" for item in items)


def _text(instance):
    return instance if isinstance(instance, str) else instance_text(instance)


def solve(instance, capacity):
    return json.loads(_chromon.solve_json(_text(instance), capacity))


def solve_split(instance, capacity):
    return json.loads(_chromon.solve_split_json(_text(instance), capacity))


def solve_weighted(instance, capacity):
    return json.loads(_chromon.solve_weighted_json(_text(instance), capacity))


def oracle(instance, capacity, guard=14):
    return _chromon.oracle_lambda(_text(instance), capacity, guard)


def verify(instance, solution, capacity=None):
    """Recheck a solve result (dict or JSON text) against the instance."""
    if isinstance(solution, dict):
        capacity = capacity or solution["capacity"]
        solution = json.dumps(solution)
    elif capacity is None:
        capacity = json.loads(solution)["capacity"]
    return json.loads(_chromon.verify_json(_text(instance), solution, capacity))


def schedule(requests, capacity, mode="splittable"):
    if not isinstance(requests, str):
        requests = instance_text(requests)
    return json.loads(_chromon.schedule_json(requests, capacity, mode))


def validate_plan(plan, requests, capacity):
    if not isinstance(requests, str):
        requests = instance_text(requests)
    if isinstance(plan, dict):
        plan = json.dumps(plan)
    return json.loads(_chromon.validate_plan_json(plan, requests, capacity))


def reduce_cnf(cnf):
    return json.loads(_chromon.reduce_json(cnf))


def split_bound(graph, capacity):
    return json.loads(_chromon.split_bound_json(graph, capacity))
