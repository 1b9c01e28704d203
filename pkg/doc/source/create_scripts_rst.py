#!/usr/bin/env python
"""
Generate scripts.rst holding the '-h' output of the command line scripts
under bin/ and of each rzu.py sub-command.
"""

import glob
import os
import subprocess

RZU_COMMANDS = ["validate", "classify", "table", "transform", "check"]


def get_script_help(cmd):
    """ Get the help text of a command, indented for a code block. """
    out = subprocess.check_output(cmd + ["-h"])
    return "".join("    {}\n".format(line) for line in out.decode().split('\n'))


def _section(title, help_text):
    return "\n{}\n{}\n\n.. code-block:: text\n\n{}\n".format(title, "-" * len(title), help_text)


if __name__ == "__main__":
    outfile = os.path.join(os.path.split(__file__)[0], 'scripts.rst')
    scripts_text = "\nScripts\n========\n"
    for script in sorted(glob.glob("../../bin/*.py")):
        cmds = [[script]]
        if os.path.basename(script) == "rzu.py":
            cmds += [[script, command] for command in RZU_COMMANDS]
        for cmd in cmds:
            try:
                scripts_text += _section(" ".join([os.path.basename(cmd[0])] + cmd[1:]), get_script_help(cmd))
            except Exception as err:
                print("Couldn't run {}\n{}".format(" ".join(cmd), err))

    with open(outfile, 'w') as f:
        f.write(scripts_text)
