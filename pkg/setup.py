#!/usr/bin/env python3
# -----------------------------------------------------------------------------
# Author: Thomas Fischer
# Version: 0.1.0
# License: MIT
# Filename: setup.py
# Pathname: /path/to/ideal4/
# Description: Setup script for IDEAL4 that installs dependencies, creates
#              the working directories and writes the default configuration
# -----------------------------------------------------------------------------

import os
import sys
import json
import argparse
import subprocess

sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from src.core.config_manager import APP_NAME, APP_VERSION, DEFAULT_CONFIG

# Define application metadata
DESCRIPTION = "delta(2) invariant and ideality checks for hypersurfaces in E^4"
AUTHOR = "Thomas Fischer"
LICENSE = "MIT"

REQUIREMENTS = {
    "runtime": [
        "numpy>=2.0.0",
        "pandas>=2.0.0",
        "scipy>=1.11.0",
    ],
    "test": [
        "pytest>=7.0",
        "hypothesis>=6.80",
    ],
}

# Directory structure
DIR_STRUCTURE = [
    "config",
    "logs",
    "reports",
    "src",
    "src/core",
    "src/elliptic",
    "src/geom",
    "src/catalog",
    "src/verify",
    "src/cli",
    "src/tests",
]


def parse_args():
    """Parse command line arguments"""
    parser = argparse.ArgumentParser(description=f"{APP_NAME} v{APP_VERSION} - {DESCRIPTION}")
    parser.add_argument("--install", action="store_true", help="Install runtime requirements")
    parser.add_argument("--dev", action="store_true", help="Also install test requirements")
    parser.add_argument("--init", action="store_true", help="Initialize project directory structure")
    parser.add_argument("--all", action="store_true", help="Perform all setup steps")
    parser.add_argument("--version", action="version", version=f"{APP_NAME} v{APP_VERSION}")

    return parser.parse_args()


def create_directory_structure():
    """Create the project directory structure"""
    print("Creating directory structure...")

    for directory in DIR_STRUCTURE:
        os.makedirs(directory, exist_ok=True)
        print(f"  Created: {directory}")

    create_default_config()

    print("Directory structure created successfully.")


def create_default_config():
    """Write config/config.json unless one already exists"""
    path = os.path.join("config", "config.json")
    if os.path.exists(path):
        print(f"  Kept existing: {path}")
        return

    with open(path, "w", encoding="utf-8") as f:
        json.dump(DEFAULT_CONFIG, f, indent=2)
        f.write("\n")

    print(f"  Created: {path}")


def install_requirements(dev: bool = False):
    """Install required Python packages"""
    requirements = list(REQUIREMENTS["runtime"])
    if dev:
        requirements.extend(REQUIREMENTS["test"])

    for req in requirements:
        print(f"Installing {req}...")
        subprocess.run([sys.executable, "-m", "pip", "install", req], check=False)

    print("Requirements installed successfully.")


def main():
    """Main entry point"""
    args = parse_args()

    print(f"\n{APP_NAME} v{APP_VERSION} - {DESCRIPTION}")
    print(f"Author: {AUTHOR}")
    print(f"License: {LICENSE}")
    print("-" * 80)

    if args.all or args.init:
        create_directory_structure()

    if args.all or args.install:
        install_requirements(dev=args.all or args.dev)

    if not any([args.all, args.init, args.install]):
        print("No action specified. Use --help to see available options.")

    print("\nSetup complete!")


def run_setuptools():
    """Packaging entry point used by pip / setuptools build backends"""
    from setuptools import setup, find_packages

    setup(
        name=APP_NAME.lower(),
        version=APP_VERSION,
        description=DESCRIPTION,
        author=AUTHOR,
        license=LICENSE,
        packages=find_packages(include=["src", "src.*"]),
        py_modules=["ideal4_main"],
        install_requires=REQUIREMENTS["runtime"],
        extras_require={"test": REQUIREMENTS["test"]},
        python_requires=">=3.10",
    )


if __name__ == "__main__":
    if len(sys.argv) > 1 and not sys.argv[1].startswith("-"):
        run_setuptools()
    else:
        main()
