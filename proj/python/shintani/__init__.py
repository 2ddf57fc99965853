"""Shintani cocycle pipeline: smoothed partial zeta values and p-adic measures."""

import json

from ._shintani import Error, oracle_l0 as _oracle_l0, run as _run

__all__ = ["Error", "run", "field", "lvalue", "lp", "measure", "verify", "oracle_l0"]


def _dump(config):
    return config if isinstance(config, str) else json.dumps(config)


def run(command, config, suite=""):
    return json.loads(_run(command, _dump(config), suite))


def field(config):
    return run("field", config)


def lvalue(config):
    return run("lvalue", config)


def measure(config):
    return run("measure", config)


def lp(config):
    return run("lp", config)


def verify(config, suite):
    return run("verify", config, suite)


def oracle_l0(minpoly, discriminant):
    return json.loads(_oracle_l0([str(c) for c in minpoly], int(discriminant)))
