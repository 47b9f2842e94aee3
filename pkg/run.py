#!/usr/bin/env python3
"""
HNN Order Lab - Quick Start Script
Run every shipped scenario and summarize the verdicts
"""

import glob
import os
import sys


def print_banner():
    """Print application banner"""
    banner = """
    ╔══════════════════════════════════════════════════════════════╗
    ║                                                              ║
    ║        🧮 HNN Order Lab - Left-Orderability Workbench        ║
    ║                                                              ║
    ║           🔁 Britton reduction over five group backends      ║
    ║           🌿 Stallings folding and lattice oracles           ║
    ║           🔍 Positive-cone search with certificates          ║
    ║                                                              ║
    ╚══════════════════════════════════════════════════════════════╝
    """
    print(banner)


def check_setup():
    """Check if setup is complete"""
    print("🔍 Checking system setup...")

    required_files = [
        "app.py",
        "requirements.txt",
        "utils/__init__.py",
        "data/scenarios",
    ]

    missing_files = [path for path in required_files if not os.path.exists(path)]
    if missing_files:
        print("❌ Missing required files:")
        for file_path in missing_files:
            print(f"   • {file_path}")
        print("\n💡 Please run setup first: python setup.py")
        return False

    try:
        import numpy
        import pandas
        import sympy
        import networkx
        print("✅ Dependencies check passed")
    except ImportError as e:
        print(f"❌ Missing dependency: {e}")
        print("💡 Please install: pip install -r requirements.txt")
        return False

    print("✅ System setup verified")
    return True


def run_shipped_scenarios():
    """Run each scenario in data/scenarios and print one line per file"""
    from utils.exceptions import ScenarioError
    from utils.scenario_runner import run_scenario

    paths = sorted(glob.glob(os.path.join("data", "scenarios", "*.scn")))
    print(f"🚀 Running {len(paths)} scenarios...\n")
    worst = 0
    for path in paths:
        try:
            report = run_scenario(path)
            code = report.exit_code
            mark = "✅" if code == 0 else "❌"
            expected = f" (expected {report.expect})" if report.expect else ""
            print(f"   {mark} {os.path.basename(path):32} {report.verdict}{expected} -> exit {code}")
        except ScenarioError as e:
            code = 3
            print(f"   ❌ {os.path.basename(path):32} input error: {e}")
        worst = max(worst, code)
    return worst


def show_quick_help():
    """Show quick usage help"""
    help_text = """
📋 Quick Help:

🔹 Run one scenario:        python app.py run data/scenarios/klein_bottle.scn
🔹 JSON report:             python app.py run <file> --format json --output data/reports/x.json
🔹 Every claim:             python app.py verify            (add --n 13 for Γ₁₃)
🔹 Subgroup rank:           python app.py fold --gens "a^2; a^3"
🔹 Γₙ canonical form:       python app.py gamma canon 12 "s^11 x s"

🔹 Note: tampered scenarios are meant to exit 1; that is the negative control.
    """
    print(help_text)


def main():
    """Main function"""
    print_banner()
    if not check_setup():
        sys.exit(1)
    print()
    worst = run_shipped_scenarios()
    show_quick_help()
    sys.exit(0 if worst in (0, 1) else worst)


if __name__ == "__main__":
    main()
