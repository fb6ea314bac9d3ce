"""Community resource-access platform: curated-answer-first assistant,
career-readiness tools, multilingual content, and anonymized usage metrics."""

__version__ = "0.1.0"
