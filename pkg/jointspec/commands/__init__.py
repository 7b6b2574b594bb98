"""One module per CLI command; each registers a subparser with a `handler`."""

from . import clt, hikes, measure, moments, obata, verify

COMMANDS = (moments, measure, clt, obata, hikes, verify)

__all__ = ["COMMANDS", "clt", "hikes", "measure", "moments", "obata", "verify"]
