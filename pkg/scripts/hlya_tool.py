#!python

from __future__ import print_function

__doc__ = """
Exact computations on finite dimensional Hom-Lie Yamaguti algebras.
Every run writes a JSON certificate (standard output or --output FILE).

USAGE:
>>> hlya_tool.py check --fixture heisenberg
>>> hlya_tool.py check algebra.json
>>> hlya_tool.py quotient algebra.json --ideal center --emit quotient.json
>>> hlya_tool.py direct-sum a.json b.json --emit sum.json
>>> hlya_tool.py factor-set --fixture heisenberg --roundtrip
>>> hlya_tool.py isoclinic fixture:heisenberg fixture:heisenberg+abelian2 --search
>>> hlya_tool.py decompose --fixture heisenberg+abelian2 --emit-prefix parts
>>> hlya_tool.py corpus --field F2 --dim 2 --exhaustive --directory corpus

Exit codes: 0 success, 1 mathematical failure, 2 malformed input,
3 construction obstruction, 4 inconclusive search.
"""

import sys

import hlyaconstructor
import hlyaconstructor.Commands

if __name__ == "__main__":
    sys.exit(hlyaconstructor.Commands.main(sys.argv[1:]))
