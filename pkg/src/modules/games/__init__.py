# Game Terms and Scores
