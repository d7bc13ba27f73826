import argparse

from src.shared.domain.exceptions.base import BusinessRuleException, ValidationException
from src.utils.cli_decorators import EXIT_VIOLATION, CliException, CliResult, cli_handler


def run(func) -> int:
    return cli_handler(func)(argparse.Namespace())


def test_result_exit_codes():
    assert run(lambda args: None) == 0
    assert run(lambda args: CliResult(EXIT_VIOLATION)) == 1


def test_domain_errors_are_usage_errors(capsys):
    def invalid(args):
        raise ValidationException("bad vertex")

    def disconnected(args):
        raise BusinessRuleException("not connected")

    assert run(invalid) == 2
    assert run(disconnected) == 2
    err = capsys.readouterr().err
    assert "ohmcurve: error: bad vertex" in err
    assert "not connected" in err


def test_cli_exception_keeps_its_code():
    def raising(args):
        raise CliException(3, "custom")

    assert run(raising) == 3


def test_unexpected_errors_exit_2(capsys):
    def broken(args):
        raise RuntimeError("boom")

    assert run(broken) == 2
    assert "internal error: boom" in capsys.readouterr().err
