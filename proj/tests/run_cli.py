"""run_cli.py EXE CODE REGEX ARGS... ; '@' in ARGS stands for ';'."""
import re
import subprocess
import sys

exe, code, regex, *args = sys.argv[1:]
args = [a.replace("@", ";") for a in args]
proc = subprocess.run([exe, *args], capture_output=True, text=True)
if proc.returncode != int(code):
    sys.exit(f"exit {proc.returncode}, wanted {code}\n{proc.stdout}\n{proc.stderr}")
if regex and not re.search(regex, proc.stdout, re.S):
    sys.exit(f"output does not match {regex!r}\n{proc.stdout}")
