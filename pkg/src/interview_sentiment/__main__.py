import sys

from interview_sentiment.cli import main

sys.exit(main())
