# HNN Order Lab - Components Module
# Text and JSON rendering of reports
