#!/usr/bin/env python3

import sys

from edo.cli import main

sys.exit(main())
