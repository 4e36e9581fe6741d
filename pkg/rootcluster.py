#!/usr/bin/env python3
"""
Standalone root cluster script - can be run directly with python3

Usage:
    python3 rootcluster.py invariants example_s3.json
    python3 rootcluster.py catalog run all -v
"""
import sys
import os

# Add src directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

# Import and run the CLI
from rootcluster.cli import main

if __name__ == '__main__':
    main()
