import json
import os
import sys
import pandas as pd
from ..errors import KiselmanError

FORMATS = ("json", "csv", "table")


def render(payload, rows, fmt, columns=None):
    """ Render a result as text

    :param payload: the JSON document
    :type payload: Dict[str, object]
    :param rows: flat records for csv / table output
    :type rows: List[Dict[str, object]]
    :param fmt: one of "json", "csv", "table"
    :type fmt: str
    :param columns: the column order for csv / table output
    :type columns: List[str]
    :return: the rendered text, ending with a newline
    :rtype: str
    """

    if fmt == "json":
        return json.dumps(payload, sort_keys=True, ensure_ascii=False) + "\n"
    frame = pd.DataFrame(rows, columns=columns)
    if fmt == "csv":
        return frame.to_csv(index=False, lineterminator="\n")
    if fmt == "table":
        if frame.empty:
            return "\n"
        return frame.to_string(index=False) + "\n"
    raise KiselmanError("Error: unknown output format %r." % (fmt))


def write_text(text, output_path=None):
    """ Write rendered text to a file, or to stdout when no path is given

    :param text: the text
    :type text: str
    :param output_path: the file path
    :type output_path: Union[str, None]
    """

    if not output_path:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    dir_name = os.path.dirname(output_path)
    try:
        if dir_name:
            os.makedirs(dir_name, exist_ok=True)
        with open(output_path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as e:
        raise KiselmanError("Error: cannot write %s (%s)." % (output_path, e.strerror))
