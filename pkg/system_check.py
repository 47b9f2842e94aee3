#!/usr/bin/env python3
"""
HNN Order Lab - System Check Script
===================================

Tests all system components to ensure proper functionality:
- Module imports
- File layout and shipped scenarios
- Word problems on each backend
- A small cone search end to end

Run this script after installation to verify everything works.
"""

import glob
import os
import sys


def print_status(status, message):
    """Print colored status messages"""
    colors = {
        'success': '\033[92m✅',
        'error': '\033[91m❌',
        'info': '\033[94m🔍',
        'warning': '\033[93m⚠️',
    }
    reset = '\033[0m'
    print(f"{colors.get(status, '📦')} {message}{reset}")


def test_python_version():
    """Test Python version compatibility"""
    print_status('info', "Testing Python version...")

    version = sys.version_info
    if version >= (3, 8):
        print_status('success', f"Python {version.major}.{version.minor}.{version.micro} - Compatible")
        return True
    print_status('error', f"Python {version.major}.{version.minor}.{version.micro} - Requires Python 3.8+")
    return False


def test_file_structure():
    """Test if all required files exist"""
    print_status('info', "Testing file structure...")

    required_files = [
        'app.py',
        'requirements.txt',
        'utils/__init__.py',
        'utils/words.py',
        'utils/hnn.py',
        'utils/cone_search.py',
        'docs/SCENARIO_FORMAT.md',
    ]
    missing = [path for path in required_files if not os.path.exists(path)]
    scenarios = glob.glob(os.path.join('data', 'scenarios', '*.scn'))
    if missing or not scenarios:
        print_status('error', "Missing required files:")
        for path in missing or ['data/scenarios/*.scn']:
            print(f"   • {path}")
        return False
    print_status('success', f"All required files present, {len(scenarios)} scenarios shipped")
    return True


def test_imports():
    """Test if all modules can be imported"""
    print_status('info', "Testing module imports...")

    try:
        from utils import FileHandler, run_scenario, verify_claims
        from components.report_view import render_scenario_text
        if None in (FileHandler, run_scenario, verify_claims):
            print_status('error', "A utils module failed to import")
            return False
        print_status('success', "All modules imported")
        return True
    except ImportError as e:
        print_status('error', f"Import error: {e}")
        return False


def test_word_problems():
    """BS(1,2) and Γ₁₂ sanity checks"""
    print_status('info', "Testing word problems...")

    from utils.gamma_group import gamma_eval
    from utils.hnn import cyclic_extension

    bs = cyclic_extension(1, 2)
    if not bs.is_identity(bs.parse("t a t^-1 a^-2")):
        print_status('error', "BS(1,2) relator does not reduce to 1")
        return False
    f1 = gamma_eval(12, "s^11 x s")
    if f1.shift != 12 or f1.exps[11] != 1:
        print_status('error', f"Unexpected canonical form {f1}")
        return False
    print_status('success', f"BS(1,2) relator trivial, f1 = {f1}")
    return True


def test_cone_search():
    """Polycyclic example at depth 6"""
    print_status('info', "Testing cone search...")

    from utils.certificates import certify_polycyclic_example
    report = certify_polycyclic_example(depth=6)
    counts = report.counts()
    if report.verdict != "NOT-LEFT-ORDERABLE":
        print_status('error', f"Polycyclic example came out {report.verdict}: {counts}")
        return False
    print_status('success', f"Polycyclic example refuted: {counts['verified']}/16 witnesses")
    return True


def run_comprehensive_test():
    """Run all tests and provide summary"""
    print("=" * 70)
    print("🧪 HNN Order Lab - System Check")
    print("=" * 70)

    tests = [
        ("Python Version", test_python_version),
        ("File Structure", test_file_structure),
        ("Module Imports", test_imports),
        ("Word Problems", test_word_problems),
        ("Cone Search", test_cone_search),
    ]

    results = {}
    for test_name, test_func in tests:
        print(f"\n🔬 Running: {test_name}")
        print("-" * 50)
        try:
            results[test_name] = test_func()
        except Exception as e:
            print_status('error', f"Test failed with exception: {e}")
            results[test_name] = False

    print("\n" + "=" * 70)
    print("📊 TEST SUMMARY")
    print("=" * 70)

    passed = sum(results.values())
    total = len(results)
    for test_name, result in results.items():
        print_status('success' if result else 'error', f"{test_name}: {'PASSED' if result else 'FAILED'}")

    print(f"\n🎯 Overall Score: {passed}/{total} tests passed")
    if passed != total:
        print_status('warning', f"{total - passed} test(s) failed")
        print("\n🛠️  Troubleshooting:")
        print("   1. Check Python version (requires 3.8+)")
        print("   2. Install dependencies: pip install -r requirements.txt")
    return passed == total


if __name__ == "__main__":
    try:
        sys.exit(0 if run_comprehensive_test() else 1)
    except KeyboardInterrupt:
        print_status('warning', "\nTest interrupted by user")
        sys.exit(1)
