import csv
import io
import os

from mako import exceptions
from mako.lookup import TemplateLookup
from mako.template import Template

from nilift import config
from nilift.logger import log
from nilift.models.output import OutputRecord


def _template(name: str) -> Template:
    lookup = TemplateLookup([config.TEMPLATES_DIRECTORY])
    with open(os.path.join(config.TEMPLATES_DIRECTORY, name), "r", encoding="utf-8") as tpl:
        return Template(tpl.read(), lookup=lookup)


def render_text(record: OutputRecord) -> str:
    try:
        return _template(record.template).render(record=record).rstrip() + "\n"
    except Exception:
        log.error(f"Could not render {record.template}")
        log.debug(exceptions.text_error_template().render())
        raise


def render_csv(record: OutputRecord) -> str:
    output = io.StringIO()
    writer = csv.writer(output, lineterminator="\n")
    writer.writerows(record.csv_rows())
    return output.getvalue()


def render_json(record: OutputRecord) -> str:
    return record.model_dump_json(indent=2) + "\n"


RENDERERS = {
    "text": render_text,
    "csv": render_csv,
    "json": render_json,
}


def render(record: OutputRecord, output_format: str = "text") -> str:
    return RENDERERS[output_format](record)
