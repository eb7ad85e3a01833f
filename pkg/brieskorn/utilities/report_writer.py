# Native libraries
import csv
import io
import json
# Project libraries
from brieskorn.utilities.utils import setup_logger
import brieskorn.config as config

# Configure logging instance
logger = setup_logger(__name__, config.DEBUG_LEVEL)


def output_document(argv, payload):
    """
    Wraps a command payload into the versioned JSON output document

    Example output:

        .. code-block:: python

            document = {
                'schema_version': '1',
                'command': ['analyze', '2', '3', '7'],
                'payload': {...}
            }

    :param argv: Command line arguments that produced the payload
    :type argv: list[str]
    :param payload: Command result, already reduced to JSON types
    :type payload: dict
    :rtype: dict
    """
    return {'schema_version': config.SCHEMA_VERSION, 'command': list(argv), 'payload': payload}


def render_json(document):
    """
    :return: Document as indented JSON with sorted keys and a trailing newline
    :rtype: str
    """
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def _scalar(value):
    """
    Renders a leaf value the way JSON would, so text and JSON output agree on every field
    """
    if isinstance(value, str):
        return value
    return json.dumps(value, ensure_ascii=False)


def flatten(payload, prefix=''):
    """
    Flattens nested dictionaries into dotted keys.
    Lists of scalars stay whole; lists holding dictionaries are indexed.

    :param payload: Nested payload
    :type payload: dict
    :param prefix: Key prefix of the enclosing level
    :type prefix: str
    :return: Pairs (dotted key, rendered value) in sorted key order
    :rtype: list[tuple[str, str]]
    """
    lines = []
    for key in sorted(payload):
        value = payload[key]
        name = '{}.{}'.format(prefix, key) if prefix else str(key)
        if isinstance(value, dict) and value:
            lines.extend(flatten(value, name))
        elif isinstance(value, list) and any(isinstance(item, dict) for item in value):
            for index, item in enumerate(value):
                if isinstance(item, dict):
                    lines.extend(flatten(item, '{}.{}'.format(name, index)))
                else:
                    lines.append(('{}.{}'.format(name, index), _scalar(item)))
        else:
            lines.append((name, _scalar(value)))
    return lines


def render_text(payload):
    """
    :return: One ``key: value`` line per flattened field
    :rtype: str
    """
    return ''.join('{}: {}\n'.format(key, value) for key, value in flatten(payload))


def render_csv(header, rows):
    """
    Writes a table with a header row. Missing cells are written empty.

    :param header: Column names
    :type header: Sequence[str]
    :param rows: One dictionary per row keyed by column name
    :type rows: Iterable[dict]
    :rtype: str
    """
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(header), lineterminator='\n', extrasaction='ignore')
    writer.writeheader()
    count = 0
    for row in rows:
        writer.writerow({key: '' if value is None else _csv_cell(value) for key, value in row.items()})
        count += 1
    logger.debug('Wrote CSV table with {} rows'.format(count))
    return buffer.getvalue()


def _csv_cell(value):
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return value
