# -*- coding: utf-8 -*-
from sflow.cli.main import run

if __name__ == "__main__":
    run()
