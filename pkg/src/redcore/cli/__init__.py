from .jobfile import JobSpec, JobSyntaxError, parse_job
from .main import main, render, run

__all__ = ["JobSpec", "JobSyntaxError", "main", "parse_job", "render", "run"]
