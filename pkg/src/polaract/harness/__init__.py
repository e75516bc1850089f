"""Table data, fixtures, reports and the command line interface."""
