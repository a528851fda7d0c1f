# -*- coding: utf-8 -*-
from __future__ import print_function
from __future__ import absolute_import
"""
Machine readable certificates of the command line tool.

Everything but duration_seconds is a function of the command and its inputs,
so two runs produce byte-identical files up to that field.
"""

import hashlib
import json

import hlyaconstructor
import hlyaconstructor.Timer as Timer


__all__ = ["canonical_json", "digest", "Certificate"]


def canonical_json(obj):
    """Compact JSON with sorted keys, the form that is hashed."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def digest(obj):
    return hashlib.sha256(canonical_json(obj).encode("utf-8")).hexdigest()


class Certificate(object):
    def __init__(self, command, arguments=None, timed=False):
        """
        Parameters
        ----------
            command : str
                The subcommand name.
            arguments : dict
                The options that change the result (never the output path or the worker count).
            timed : bool
                Record the library calls in self.timer. Never written into the certificate.
        """
        self.command = command
        self.arguments = dict(arguments) if arguments else {}
        self.inputs = []
        self.results = {}
        self.verdict = None
        self.exit_code = None
        self.duration_seconds = 0.0
        self.timer = Timer.Timer(active=timed)
        self.timer.start()

    def add_input(self, name, document):
        """Record an input document by its digest."""
        self.inputs.append({"name": name, "sha256": digest(document)})

    def set_result(self, key, value):
        self.results[key] = value

    def finish(self, verdict, exit_code):
        self.verdict = verdict
        self.exit_code = exit_code
        self.duration_seconds = round(self.timer.elapsed(), 6)
        return self

    def to_dict(self):
        return {"tool": "hlya_tool.py",
                "version": hlyaconstructor.__version__,
                "command": self.command,
                "arguments": self.arguments,
                "inputs": self.inputs,
                "results": self.results,
                "verdict": self.verdict,
                "exit_code": self.exit_code,
                "duration_seconds": self.duration_seconds}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def save(self, filename):
        with open(filename, "w") as fp:
            fp.write(self.to_json())
            fp.write("\n")
